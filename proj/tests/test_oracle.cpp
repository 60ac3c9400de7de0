#include <catch_amalgamated.hpp>

#include "hamcount/exact.hpp"
#include "hamcount/oracle.hpp"
#include "hamcount/verify.hpp"

using namespace hamcount;

TEST_CASE("smirnov word enumeration") {
    CHECK(oracle::enumerate_smirnov(Composition({1, 1, 1}), EndpointSpec::all_distinct()) == Count(6ul));
    CHECK(oracle::enumerate_smirnov(Composition({2, 2}), EndpointSpec::all_distinct()) == Count(2ul));
    CHECK(oracle::enumerate_smirnov(Composition({2}), EndpointSpec::all_distinct()) == Count(0ul));
    CHECK(oracle::enumerate_smirnov(Composition({2, 2, 2}), EndpointSpec::pair(1, 2)) == Count(4ul));
    CHECK(oracle::enumerate_smirnov(Composition({2, 1}), EndpointSpec::same(1)) == Count(1ul));
}

TEST_CASE("word enumeration bound") {
    CHECK_THROWS_AS(oracle::enumerate_smirnov(Composition({7, 7}), EndpointSpec::all_distinct()),
                    oracle::BoundExceeded);
    // bound is configuration, not a constant
    CHECK(oracle::enumerate_smirnov(Composition({7, 7}), EndpointSpec::all_distinct(), 14) ==
          Count(2ul));
}

TEST_CASE("graph instance adjacency") {
    oracle::GraphInstance g(Composition({2, 1}));
    CHECK(g.size() == 3);
    CHECK_FALSE(g.adjacent(0, 1));  // same part
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 2));
}

TEST_CASE("hamiltonian cycle brute force") {
    CHECK(oracle::count_ham_cycles_bruteforce(Composition({1, 1, 1, 1})) == Count(3ul));
    CHECK(oracle::count_ham_cycles_bruteforce(Composition({3, 3})) == Count(6ul));
    CHECK(oracle::count_ham_cycles_bruteforce(Composition({1, 1})) == Count(0ul));
    CHECK_THROWS_AS(oracle::count_ham_cycles_bruteforce(Composition({6, 6})), oracle::BoundExceeded);
}

TEST_CASE("hamiltonian path brute force") {
    CHECK(oracle::count_ham_paths_bruteforce(Composition({1, 1})) == Count(2ul));
    CHECK(oracle::count_ham_paths_bruteforce(Composition({2, 2})) == Count(8ul));
    CHECK(oracle::count_ham_paths_bruteforce(Composition({1, 1, 1})) == Count(6ul));
}

TEST_CASE("cyclic orbit brute force") {
    auto r1 = oracle::count_cyclic_orbits_bruteforce(Composition({2, 2}));
    CHECK(r1.first == Count(2ul));
    CHECK(r1.second == Count(1ul));
    auto r2 = oracle::count_cyclic_orbits_bruteforce(Composition({1, 1, 1}));
    CHECK(r2.first == Count(6ul));
    CHECK(r2.second == Count(2ul));
    auto r3 = oracle::count_cyclic_orbits_bruteforce(Composition({1, 1}));
    CHECK(r3.first == Count(2ul));
    CHECK(r3.second == Count(1ul));
}

TEST_CASE("orbit sizes sum to the positioned tally") {
    // Burnside consistency at the witness level: every orbit has size
    // dividing N, and the orbit tally matches necklace_count
    for (const auto& c : verify::all_compositions(8, 4)) {
        if (c.total() < 2) continue;
        auto [positioned, orbits] = oracle::count_cyclic_orbits_bruteforce(c);
        INFO("parts=" << c.str());
        CHECK(positioned == circular_positioned_count(c));
        CHECK(orbits == necklace_count(c));
    }
}

TEST_CASE("verification suites pass on a small sweep") {
    auto results = verify::run_all(7, 4);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.first_counterexample);
        CHECK(r.failures == 0);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("oracle equals formulas across the sweep") {
    for (const auto& c : verify::all_compositions(8, 4)) {
        INFO("parts=" << c.str());
        CHECK(oracle::enumerate_smirnov(c, EndpointSpec::all_distinct()) == s_count(c));
        CHECK(oracle::count_ham_cycles_bruteforce(c) == hamiltonian_cycles(c));
        CHECK(oracle::count_ham_paths_bruteforce(c) == hamiltonian_paths(c));
    }
}

TEST_CASE("paths = 2N * cycles for N >= 3") {
    for (const auto& c : verify::all_compositions(8, 8)) {
        if (c.total() < 3) continue;
        Count paths = oracle::count_ham_paths_bruteforce(c);
        Count cycles = oracle::count_ham_cycles_bruteforce(c);
        INFO("parts=" << c.str());
        CHECK(paths == Count(mpz_class(cycles.value() * (2ul * static_cast<unsigned long>(c.total())))));
    }
}
