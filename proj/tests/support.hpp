#pragma once

// Test-side oracles, kept independent of the library's algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "indcx/grid.hpp"
#include "indcx/types.hpp"

namespace testing_support {

using indcx::Face;
using indcx::Graph;

// Neighbourhood masks straight from the adjacency lists; blocked vertices
// and removed ones are simply excluded from the ground set.
inline std::vector<Face> raw_masks(const Graph& g, Face& ground) {
    const int n = g.vertex_count();
    std::vector<Face> nb(n, 0);
    ground = 0;
    for (int v = 0; v < n; ++v) {
        if (!g.usable(v)) continue;
        ground |= Face{1} << v;
        for (int w : g.neighbors(v))
            if (w != v) nb[v] |= Face{1} << w;
    }
    return nb;
}

// Sum of (-1)^|S| over independent S by looping over every subset of the ground set.
inline long long subset_loop_z(const Graph& g, long long* count = nullptr) {
    Face ground;
    auto nb = raw_masks(g, ground);
    std::vector<int> ids;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((ground >> v) & 1) ids.push_back(v);
    const int k = static_cast<int>(ids.size());
    long long z = 0, c = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        Face f = 0;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            if ((s >> i) & 1) {
                int v = ids[i];
                if (nb[v] & f) ok = false;
                f |= Face{1} << v;
            }
        if (!ok) continue;
        ++c;
        z += (__builtin_popcountll(s) % 2) ? -1 : 1;
    }
    if (count) *count = c;
    return z;
}

inline long long fib(int k) {
    long long a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        long long t = a + b;
        a = b;
        b = t;
    }
    return a;
}

struct Drawn {
    Graph g;
    indcx::Family family;
    int m, n;
};

// A graph from one of the constructors, at most max_v vertex ids, with a
// few vertices deleted now and then.
inline Drawn random_graph(std::mt19937_64& rng, int max_v = 22) {
    using indcx::Family;
    static const Family fams[] = {Family::SquareRect, Family::SquareCyl,   Family::SquareTorus, Family::HexRect,
                                  Family::HexCyl,     Family::HexTorus,    Family::Parallelogram};
    for (;;) {
        Family f = fams[rng() % 7];
        int m = 1 + static_cast<int>(rng() % 6), n = 1 + static_cast<int>(rng() % 8);
        Graph g = indcx::build_family(f, m, n);
        if (g.vertex_count() > max_v || g.vertex_count() < 2) continue;
        if (rng() % 3 == 0) {
            std::vector<int> del;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (rng() % 6 == 0) del.push_back(v);
            if (!del.empty()) g = indcx::induced_delete(g, del);
        }
        return {g, f, m, n};
    }
}

}  // namespace testing_support
