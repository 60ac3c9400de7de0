#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamcount/composition.hpp"
#include "hamcount/count.hpp"

namespace hamcount::oracle {

struct BoundExceeded : std::invalid_argument {
    explicit BoundExceeded(int n, int bound)
        : std::invalid_argument("oracle size " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound)) {}
};

inline constexpr int kDefaultWordBound = 12;
inline constexpr int kDefaultGraphBound = 10;

// Depth-first placement with remaining-multiplicity bookkeeping.
inline Count enumerate_smirnov(const Composition& parts, const EndpointSpec& endpoints,
                               int bound = kDefaultWordBound) {
    const int N = parts.total();
    if (N > bound) throw BoundExceeded(N, bound);
    endpoints.validate(parts);

    const int m = parts.num_colors();
    std::vector<int> rem = parts.parts();
    unsigned long found = 0;

    auto endpoint_ok = [&](int first, int last) {
        switch (endpoints.kind) {
            case EndpointSpec::Kind::Pair:
                return first == endpoints.s && last == endpoints.r;
            case EndpointSpec::Kind::AllDistinctPairs:
                return first != last;
            case EndpointSpec::Kind::SameEndpoint:
                return first == endpoints.s && last == endpoints.s;
        }
        return false;
    };

    // first: color of position 0, prev: color just placed
    auto dfs = [&](auto&& self, int depth, int first, int prev) -> void {
        if (depth == N) {
            if (endpoint_ok(first, prev)) ++found;
            return;
        }
        for (int c = 1; c <= m; ++c) {
            if (c == prev || rem[static_cast<size_t>(c - 1)] == 0) continue;
            --rem[static_cast<size_t>(c - 1)];
            self(self, depth + 1, depth == 0 ? c : first, c);
            ++rem[static_cast<size_t>(c - 1)];
        }
    };
    dfs(dfs, 0, 0, 0);
    return Count(found);
}

// K_{n_1,...,n_m} with vertices 0..N-1; adjacency iff distinct parts.
struct GraphInstance {
    explicit GraphInstance(const Composition& parts) {
        for (int i = 0; i < parts.num_colors(); ++i)
            for (int j = 0; j < parts.parts()[static_cast<size_t>(i)]; ++j)
                part_of.push_back(i);
    }
    bool adjacent(int u, int v) const {
        return part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)];
    }
    int size() const { return static_cast<int>(part_of.size()); }
    std::vector<int> part_of;
};

// Undirected Hamiltonian cycles, each emitted once: DFS rooted at vertex
// 0, reflection quotiented by requiring second vertex < last vertex.
inline Count count_ham_cycles_bruteforce(const Composition& parts,
                                         int bound = kDefaultGraphBound) {
    const int N = parts.total();
    if (N > bound) throw BoundExceeded(N, bound);
    if (N < 3) return Count(0ul);
    GraphInstance g(parts);

    unsigned long found = 0;
    std::vector<int> path{0};
    std::vector<bool> used(static_cast<size_t>(N), false);
    used[0] = true;

    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == N) {
            if (g.adjacent(path.back(), 0) && path[1] < path.back()) ++found;
            return;
        }
        for (int v = 1; v < N; ++v) {
            if (used[static_cast<size_t>(v)] || !g.adjacent(path.back(), v)) continue;
            used[static_cast<size_t>(v)] = true;
            path.push_back(v);
            self(self);
            path.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
    };
    dfs(dfs);
    return Count(found);
}

// Directed Hamiltonian paths with endpoints in distinct parts.
inline Count count_ham_paths_bruteforce(const Composition& parts,
                                        int bound = kDefaultGraphBound) {
    const int N = parts.total();
    if (N > bound) throw BoundExceeded(N, bound);
    GraphInstance g(parts);
    if (N < 2) return Count(0ul);

    unsigned long found = 0;
    std::vector<int> path;
    std::vector<bool> used(static_cast<size_t>(N), false);

    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == N) {
            if (g.adjacent(path.front(), path.back())) ++found;  // distinct parts
            return;
        }
        for (int v = 0; v < N; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (!path.empty() && !g.adjacent(path.back(), v)) continue;
            used[static_cast<size_t>(v)] = true;
            path.push_back(v);
            self(self);
            path.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
    };
    dfs(dfs);
    return Count(found);
}

// Positioned cyclic Smirnov words and their rotation orbits.
inline std::pair<Count, Count> count_cyclic_orbits_bruteforce(const Composition& parts,
                                                              int bound = kDefaultWordBound) {
    const int N = parts.total();
    if (N > bound) throw BoundExceeded(N, bound);
    if (N < 2) throw std::invalid_argument("cyclic oracle needs length >= 2");

    const int m = parts.num_colors();
    std::vector<int> rem = parts.parts();
    std::vector<int> word;
    std::set<ColorWord> positioned;

    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == N) {
            if (word.front() != word.back()) positioned.insert(word);  // wrap-around pair
            return;
        }
        for (int c = 1; c <= m; ++c) {
            if (rem[static_cast<size_t>(c - 1)] == 0) continue;
            if (!word.empty() && word.back() == c) continue;
            --rem[static_cast<size_t>(c - 1)];
            word.push_back(c);
            self(self);
            word.pop_back();
            ++rem[static_cast<size_t>(c - 1)];
        }
    };
    dfs(dfs);

    // group by rotation: count words that are the lexicographically
    // least among their rotations
    unsigned long orbits = 0;
    for (const auto& w : positioned) {
        bool least = true;
        ColorWord rot = w;
        for (int k = 1; k < N && least; ++k) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < w) least = false;
        }
        if (least) ++orbits;
    }
    return {Count(positioned.size()), Count(orbits)};
}

}  // namespace hamcount::oracle
