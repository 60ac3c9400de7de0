#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hamcount/composition.hpp"
#include "hamcount/exact.hpp"
#include "hamcount/oracle.hpp"

namespace hamcount::verify {

// All ordered compositions (n_1,...,n_m), parts >= 1, m <= max_m, sum <= max_n.
inline std::vector<Composition> all_compositions(int max_n, int max_m) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!cur.empty()) out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_m) return;
        for (int p = 1; p <= remaining; ++p) {
            cur.push_back(p);
            self(self, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, max_n);
    return out;
}

struct SuiteResult {
    std::string name;
    long checked = 0;
    long failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
};

using Check = std::function<bool(const Composition&, std::string& detail)>;

// Runs one predicate over a composition sweep, fanned out over workers.
inline SuiteResult run_suite(const std::string& name, const std::vector<Composition>& comps,
                             const Check& check, unsigned workers = 0) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    SuiteResult result;
    result.name = name;
    std::mutex mu;
    std::atomic<size_t> next{0};

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= comps.size()) return;
            std::string detail;
            bool ok;
            try {
                ok = check(comps[i], detail);
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
            std::lock_guard<std::mutex> lock(mu);
            ++result.checked;
            if (!ok) {
                ++result.failures;
                if (result.first_counterexample.empty())
                    result.first_counterexample = "(" + comps[i].str() + ") " + detail;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return result;
}

// The standard invariant suites over a sweep bound. Word-level oracle
// checks stay within word_bound, graph-level within graph_bound.
inline std::vector<SuiteResult> run_all(int max_n, int max_m, unsigned workers = 0) {
    auto comps = all_compositions(max_n, max_m);

    std::vector<SuiteResult> results;

    results.push_back(run_suite("closed = recurrence (per endpoint pair)", comps,
        [](const Composition& c, std::string& detail) {
            for (int s = 1; s <= c.num_colors(); ++s)
                for (int r = 1; r <= c.num_colors(); ++r) {
                    Count a = f_endpoint_closed(c, s, r);
                    Count b = f_endpoint_recurrence(c, s, r);
                    if (a != b) {
                        detail = "s=" + std::to_string(s) + " r=" + std::to_string(r) +
                                 ": closed " + a.str() + " vs recurrence " + b.str();
                        return false;
                    }
                }
            return true;
        }, workers));

    results.push_back(run_suite("word oracle = s_count", comps,
        [max_n](const Composition& c, std::string& detail) {
            Count brute = oracle::enumerate_smirnov(c, EndpointSpec::all_distinct(), max_n);
            Count fast = s_count(c);
            if (brute != fast) {
                detail = "oracle " + brute.str() + " vs s_count " + fast.str();
                return false;
            }
            return true;
        }, workers));

    results.push_back(run_suite("endpoint reversal symmetry", comps,
        [](const Composition& c, std::string& detail) {
            for (int s = 1; s <= c.num_colors(); ++s)
                for (int r = 1; r <= c.num_colors(); ++r)
                    if (f_endpoint_closed(c, s, r) != f_endpoint_closed(c, r, s)) {
                        detail = "asymmetric at s=" + std::to_string(s) + " r=" + std::to_string(r);
                        return false;
                    }
            return true;
        }, workers));

    results.push_back(run_suite("s_count part-permutation invariance", comps,
        [](const Composition& c, std::string& detail) {
            std::vector<int> rev(c.parts().rbegin(), c.parts().rend());
            std::vector<int> sorted = c.sorted_key();
            Count base = s_count(c);
            if (s_count(Composition(rev)) != base || s_count(Composition(sorted)) != base) {
                detail = "permutation changed s_count";
                return false;
            }
            return true;
        }, workers));

    results.push_back(run_suite("graph oracle: cycles", comps,
        [max_n](const Composition& c, std::string& detail) {
            Count brute = oracle::count_ham_cycles_bruteforce(c, max_n);
            Count fast = hamiltonian_cycles(c);
            if (brute != fast) {
                detail = "oracle " + brute.str() + " vs formula " + fast.str();
                return false;
            }
            return true;
        }, workers));

    results.push_back(run_suite("graph oracle: paths, and paths = 2N * cycles", comps,
        [max_n](const Composition& c, std::string& detail) {
            Count brute = oracle::count_ham_paths_bruteforce(c, max_n);
            Count fast = hamiltonian_paths(c);
            if (brute != fast) {
                detail = "oracle " + brute.str() + " vs formula " + fast.str();
                return false;
            }
            if (c.total() >= 3) {
                Count cyc = oracle::count_ham_cycles_bruteforce(c, max_n);
                Count lhs = brute;
                Count rhs = Count(mpz_class(cyc.value() * (2ul * static_cast<unsigned long>(c.total()))));
                if (lhs != rhs) {
                    detail = "paths " + lhs.str() + " != 2N*cycles " + rhs.str();
                    return false;
                }
            }
            return true;
        }, workers));

    results.push_back(run_suite("divisibility: 2N | paths (N >= 3)", comps,
        [](const Composition& c, std::string& detail) {
            if (c.total() < 3) return true;
            try {
                hamiltonian_cycles(c);  // throws InternalInconsistency on failure
            } catch (const InternalInconsistency& e) {
                detail = e.what();
                return false;
            }
            return true;
        }, workers));

    results.push_back(run_suite("directed = 2 * undirected", comps,
        [](const Composition& c, std::string& detail) {
            Count u = hamiltonian_cycles(c);
            Count d = hamiltonian_cycles_directed(c);
            if (d != Count(mpz_class(u.value() * 2))) {
                detail = "directed " + d.str() + " undirected " + u.str();
                return false;
            }
            return true;
        }, workers));

    results.push_back(run_suite("cut identity: sum_s closure = s_count", comps,
        [](const Composition& c, std::string& detail) {
            Count sum(0ul);
            for (int s = 1; s <= c.num_colors(); ++s)
                sum += f_same_endpoint_closure(c, s);
            Count expected = s_count(c);
            if (sum != expected) {
                detail = "sum " + sum.str() + " vs s_count " + expected.str();
                return false;
            }
            return true;
        }, workers));

    results.push_back(run_suite("cyclic oracle: positioned and necklaces", comps,
        [max_n](const Composition& c, std::string& detail) {
            if (c.total() < 2) return true;
            auto [positioned, orbits] = oracle::count_cyclic_orbits_bruteforce(c, max_n);
            if (positioned != circular_positioned_count(c)) {
                detail = "positioned oracle " + positioned.str() + " vs " +
                         circular_positioned_count(c).str();
                return false;
            }
            if (orbits != necklace_count(c)) {
                detail = "orbit oracle " + orbits.str() + " vs necklace " + necklace_count(c).str();
                return false;
            }
            return true;
        }, workers));

    return results;
}

}  // namespace hamcount::verify
