#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hamcount/composition.hpp"
#include "hamcount/count.hpp"

namespace hamcount {

enum class Strategy { Auto, Closed, Recurrence };

// Thrown when a divisibility guarantee fails; signals an implementation
// bug, not bad input (CLI maps it to exit code 2).
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

inline void check_color(const Composition& c, int col) {
    if (col < 1 || col > c.num_colors())
        throw std::invalid_argument("color index out of range: " + std::to_string(col));
}

}  // namespace detail

// Endpoint-constrained Smirnov counts by the memoized recurrence.
// State: remaining multiplicities after the letters placed so far, the
// color just placed, and the required final color. Colors other than
// those two are interchangeable, so the memo key holds (count at current,
// count at target, sorted rest); the relabeling symmetry shrinks the
// state space considerably.
class RecurrenceEngine {
public:
    // parts are TOTAL multiplicities of the whole word; the first letter
    // consumes one occurrence of s before the recurrence starts.
    Count f_endpoint(const Composition& parts, int s, int r) {
        detail::check_color(parts, s);
        detail::check_color(parts, r);
        if (parts.part(s) == 0) return Count(0ul);
        std::vector<int> rem = parts.parts();
        --rem[static_cast<size_t>(s - 1)];
        return eval(rem, s - 1, r - 1);
    }

    size_t memo_size() const { return memo_.size(); }

private:
    Count eval(std::vector<int>& rem, int cur, int tgt) {
        bool done = std::all_of(rem.begin(), rem.end(), [](int a) { return a == 0; });
        if (done) return Count(cur == tgt ? 1ul : 0ul);

        std::vector<int> key = canonical_key(rem, cur, tgt);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Count total(0ul);
        for (int x = 0; x < static_cast<int>(rem.size()); ++x) {
            if (x == cur || rem[static_cast<size_t>(x)] == 0) continue;
            --rem[static_cast<size_t>(x)];
            total += eval(rem, x, tgt);
            ++rem[static_cast<size_t>(x)];
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    static std::vector<int> canonical_key(const std::vector<int>& rem, int cur, int tgt) {
        std::vector<int> key;
        key.reserve(rem.size() + 2);
        key.push_back(cur == tgt ? -1 : rem[static_cast<size_t>(tgt)]);
        key.push_back(rem[static_cast<size_t>(cur)]);
        for (int i = 0; i < static_cast<int>(rem.size()); ++i)
            if (i != cur && i != tgt) key.push_back(rem[static_cast<size_t>(i)]);
        std::sort(key.begin() + 2, key.end());
        return key;
    }

    std::map<std::vector<int>, Count> memo_;
};

inline Count f_endpoint_recurrence(const Composition& parts, int s, int r) {
    RecurrenceEngine engine;
    return engine.f_endpoint(parts, s, r);
}

// Closed inclusion-exclusion form. Totals in, adjusted counts
// n_i' = n_i - [i=s] - [i=r]; the k-vector odometer is bounded by
// min(n_i - 1, n_i') since larger k_i only produce vanishing summands.
inline Count f_endpoint_closed(const Composition& parts, int s, int r) {
    detail::check_color(parts, s);
    detail::check_color(parts, r);
    const int m = parts.num_colors();
    const int N = parts.total();
    // the block derivation fixes two endpoint positions and needs a
    // second color to separate blocks; below that, answer directly
    if (N == 1) return Count(s == r ? 1ul : 0ul);
    if (m == 1) return Count(0ul);
    std::vector<int> adj(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        adj[static_cast<size_t>(i)] = parts.parts()[static_cast<size_t>(i)]
            - (i == s - 1 ? 1 : 0) - (i == r - 1 ? 1 : 0);
        if (adj[static_cast<size_t>(i)] < 0) return Count(0ul);
    }

    std::vector<Count> fact(static_cast<size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) fact[static_cast<size_t>(i)] = factorial(static_cast<unsigned long>(i));

    std::vector<int> kmax(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        kmax[static_cast<size_t>(i)] = std::min(parts.parts()[static_cast<size_t>(i)] - 1,
                                                adj[static_cast<size_t>(i)]);

    mpz_class acc = 0;
    std::vector<int> k(static_cast<size_t>(m), 0);
    while (true) {
        int ksum = std::accumulate(k.begin(), k.end(), 0);
        mpz_class term = fact[static_cast<size_t>(N - 2 - ksum)].value();
        for (int i = 0; i < m; ++i) {
            term *= binomial(static_cast<unsigned long>(parts.parts()[static_cast<size_t>(i)] - 1),
                             static_cast<unsigned long>(k[static_cast<size_t>(i)])).value();
            mpz_divexact(term.get_mpz_t(), term.get_mpz_t(),
                         fact[static_cast<size_t>(adj[static_cast<size_t>(i)] - k[static_cast<size_t>(i)])].value().get_mpz_t());
        }
        if (ksum % 2 == 0) acc += term; else acc -= term;

        // colexicographic odometer
        int pos = 0;
        while (pos < m && k[static_cast<size_t>(pos)] == kmax[static_cast<size_t>(pos)]) {
            k[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == m) break;
        ++k[static_cast<size_t>(pos)];
    }
    if (acc < 0)
        throw InternalInconsistency("inclusion-exclusion sum went negative for " + parts.str());
    return Count(acc);
}

namespace detail {

// summand count of the closed formula, saturating at limit
inline long long closed_cost(const Composition& parts, long long limit) {
    long long prod = 1;
    for (int p : parts.parts()) {
        prod *= p;
        if (prod > limit) return limit + 1;
    }
    return prod;
}

}  // namespace detail

inline Count f_endpoint(const Composition& parts, int s, int r,
                        Strategy strategy = Strategy::Auto,
                        RecurrenceEngine* engine = nullptr) {
    if (strategy == Strategy::Auto)
        strategy = detail::closed_cost(parts, 10'000'000) <= 10'000'000
                       ? Strategy::Closed : Strategy::Recurrence;
    if (strategy == Strategy::Closed) return f_endpoint_closed(parts, s, r);
    if (engine) return engine->f_endpoint(parts, s, r);
    return f_endpoint_recurrence(parts, s, r);
}

// Sum over ordered endpoint pairs s != r. Uniform compositions use the
// m(m-1) shortcut; otherwise pairs sharing a multiplicity pattern
// (n_s, n_r, multiset of the rest) share one evaluation.
inline Count s_count(const Composition& parts, Strategy strategy = Strategy::Auto) {
    const int m = parts.num_colors();
    if (m < 2) return Count(0ul);
    RecurrenceEngine engine;
    if (parts.uniform()) {
        Count one = f_endpoint(parts, 1, 2, strategy, &engine);
        return Count(mpz_class(one.value() * (static_cast<unsigned long>(m) * (m - 1))));
    }
    std::map<std::vector<int>, Count> by_pattern;
    Count total(0ul);
    for (int s = 1; s <= m; ++s) {
        for (int r = 1; r <= m; ++r) {
            if (s == r) continue;
            std::vector<int> pat;
            pat.push_back(parts.part(s));
            pat.push_back(parts.part(r));
            for (int i = 1; i <= m; ++i)
                if (i != s && i != r) pat.push_back(parts.part(i));
            std::sort(pat.begin() + 2, pat.end());
            auto it = by_pattern.find(pat);
            if (it == by_pattern.end())
                it = by_pattern.emplace(pat, f_endpoint(parts, s, r, strategy, &engine)).first;
            total += it->second;
        }
    }
    return total;
}

inline Count letter_filling_factor(const Composition& parts) {
    mpz_class prod = 1;
    for (int p : parts.parts()) prod *= factorial(static_cast<unsigned long>(p)).value();
    return Count(prod);
}

// Words over the full multipartite alphabet (every letter used once),
// Smirnov at the color level, endpoints in distinct blocks.
inline Count admissible_word_count(const Composition& parts, Strategy strategy = Strategy::Auto) {
    return letter_filling_factor(parts) * s_count(parts, strategy);
}

// Directed Hamiltonian paths of K_{n_1,...,n_m} with endpoints in
// distinct parts; equinumerous with admissible words.
inline Count hamiltonian_paths(const Composition& parts, Strategy strategy = Strategy::Auto) {
    return admissible_word_count(parts, strategy);
}

// Undirected Hamiltonian cycles: each cycle has 2N rooted directed
// traversals. Degenerate below 3 vertices or 2 parts.
inline Count hamiltonian_cycles(const Composition& parts, Strategy strategy = Strategy::Auto) {
    const int N = parts.total();
    if (N < 3 || parts.num_colors() < 2) return Count(0ul);
    Count prod = admissible_word_count(parts, strategy);
    mpz_class q, rem;
    unsigned long div = 2ul * static_cast<unsigned long>(N);
    mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), prod.value().get_mpz_t(), div);
    if (rem != 0)
        throw InternalInconsistency("2N does not divide the path count for " + parts.str());
    return Count(q);
}

inline Count hamiltonian_cycles_directed(const Composition& parts, Strategy strategy = Strategy::Auto) {
    Count undirected = hamiltonian_cycles(parts, strategy);
    return Count(mpz_class(undirected.value() * 2));
}

// Linear words of length N+1 with one extra occurrence of s at the far
// end: the "cut a cycle after s" closure reading of same-endpoint counts.
inline Count f_same_endpoint_closure(const Composition& parts, int s,
                                     Strategy strategy = Strategy::Auto) {
    detail::check_color(parts, s);
    std::vector<int> grown = parts.parts();
    ++grown[static_cast<size_t>(s - 1)];
    return f_endpoint(Composition(grown), s, s, strategy);
}

// Position-indexed cyclic Smirnov words (rotations distinct). The linear
// reading from the distinguished position is exactly a Smirnov word with
// distinct endpoints, so this equals s_count.
inline Count circular_positioned_count(const Composition& parts, Strategy strategy = Strategy::Auto) {
    if (parts.total() < 2) throw std::invalid_argument("circular words need length >= 2");
    return s_count(parts, strategy);
}

namespace detail {

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace detail

// Rotation-equivalence classes of cyclic Smirnov words, by Burnside
// averaging over the rotation group. A word fixed by the rotation of
// order N/d is a repetition of a cyclic Smirnov word of length d with
// multiplicities scaled by d/N; no such word exists at d = 1 (the single
// letter wraps onto itself).
inline Count necklace_count(const Composition& parts, Strategy strategy = Strategy::Auto) {
    const int N = parts.total();
    if (N < 2) throw std::invalid_argument("necklaces need length >= 2");
    mpz_class sum = 0;
    for (int d = 1; d <= N; ++d) {
        if (N % d != 0) continue;
        const int scale = N / d;  // rotation order
        if (d == 1) continue;
        bool divisible = std::all_of(parts.parts().begin(), parts.parts().end(),
                                     [&](int p) { return p % scale == 0; });
        if (!divisible) continue;
        std::vector<int> scaled;
        scaled.reserve(parts.parts().size());
        for (int p : parts.parts()) scaled.push_back(p / scale);
        Count fixed = circular_positioned_count(Composition(scaled), strategy);
        sum += fixed.value() * detail::euler_phi(static_cast<unsigned long>(scale));
    }
    mpz_class q, rem;
    mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(N));
    if (rem != 0)
        throw InternalInconsistency("Burnside sum not divisible by N for " + parts.str());
    return Count(q);
}

// The uncorrected linearization value S/N, for side-by-side reporting.
// Not an orbit count when rotation-symmetric words exist (e.g. 1212).
inline std::pair<Count, unsigned long> circular_raw_identity(const Composition& parts,
                                                             Strategy strategy = Strategy::Auto) {
    const int m = parts.num_colors();
    Count sum(0ul);
    for (int s = 1; s <= m; ++s) sum += f_same_endpoint_closure(parts, s, strategy);
    return {sum, static_cast<unsigned long>(parts.total())};
}

inline Count knuth_tripartite(int p, int q, int r, Strategy strategy = Strategy::Auto) {
    return hamiltonian_cycles(Composition({p, q, r}), strategy);
}

}  // namespace hamcount
