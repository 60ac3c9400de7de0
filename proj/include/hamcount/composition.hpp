#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamcount/count.hpp"

namespace hamcount {

// Ordered part-size vector (n_1,...,n_m). Equality is order-sensitive;
// sorted_key() exposes the canonical form used by memo tables and caches.
class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    }

    const std::vector<int>& parts() const { return parts_; }
    int part(int color) const { return parts_.at(static_cast<size_t>(color - 1)); }
    int num_colors() const { return static_cast<int>(parts_.size()); }
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool uniform() const {
        return std::all_of(parts_.begin(), parts_.end(),
                           [&](int p) { return p == parts_.front(); });
    }

    std::vector<int> sorted_key() const {
        std::vector<int> k = parts_;
        std::sort(k.begin(), k.end());
        return k;
    }

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    // "3,3,4" -> Composition({3,3,4})
    static Composition parse(const std::string& s) {
        std::vector<int> parts;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad parts list: " + s);
            parts.push_back(v);
        }
        return Composition(parts);
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
};

struct EndpointSpec {
    enum class Kind { Pair, AllDistinctPairs, SameEndpoint };
    Kind kind = Kind::AllDistinctPairs;
    int s = 0;  // Pair, SameEndpoint
    int r = 0;  // Pair

    static EndpointSpec pair(int s, int r) { return {Kind::Pair, s, r}; }
    static EndpointSpec all_distinct() { return {Kind::AllDistinctPairs, 0, 0}; }
    static EndpointSpec same(int s) { return {Kind::SameEndpoint, s, 0}; }

    void validate(const Composition& c) const {
        auto check = [&](int col) {
            if (col < 1 || col > c.num_colors())
                throw std::invalid_argument("color index out of range: " + std::to_string(col));
        };
        if (kind == Kind::Pair) { check(s); check(r); }
        if (kind == Kind::SameEndpoint) check(s);
    }
};

// Oracle-side witness: a concrete sequence of colors.
using ColorWord = std::vector<int>;

inline bool is_smirnov(const ColorWord& w) {
    for (size_t t = 0; t + 1 < w.size(); ++t)
        if (w[t] == w[t + 1]) return false;
    return true;
}

inline bool matches_multiplicities(const ColorWord& w, const Composition& c) {
    std::vector<int> seen(static_cast<size_t>(c.num_colors()), 0);
    for (int x : w) {
        if (x < 1 || x > c.num_colors()) return false;
        ++seen[static_cast<size_t>(x - 1)];
    }
    for (int i = 0; i < c.num_colors(); ++i)
        if (seen[static_cast<size_t>(i)] != c.parts()[static_cast<size_t>(i)]) return false;
    return true;
}

inline Count multinomial(const Composition& c) {
    Count r = factorial(static_cast<unsigned long>(c.total()));
    mpz_class v = r.value();
    for (int p : c.parts())
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), factorial(static_cast<unsigned long>(p)).value().get_mpz_t());
    return Count(v);
}

}  // namespace hamcount
