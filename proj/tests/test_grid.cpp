#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "indcx/complex.hpp"
#include "indcx/grid.hpp"
#include "support.hpp"

using namespace indcx;

TEST_CASE("square rectangle has the grid edge count", "[grid]") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 6; ++n) {
            Graph g = build_square_rect(m, n);
            CHECK(g.vertex_count() == m * n);
            CHECK(g.edge_count() == m * (n - 1) + (m - 1) * n);
        }
}

TEST_CASE("cylinder equals the rectangle with its columns wrapped", "[grid]") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 3; n <= 7; ++n) {
            auto want = wrapped_rect_edges(m, n);
            auto got = build_square_cyl(m, n).edges();
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            CHECK(got == want);
        }
}

TEST_CASE("cylinder of circumference 2 is the ladder", "[grid]") {
    for (int m = 1; m <= 6; ++m) {
        auto a = build_square_cyl(m, 2).edges(), b = build_square_rect(m, 2).edges();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("square torus is 4-regular once both sides exceed 2", "[grid]") {
    Graph g = build_square_torus(4, 5);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 4);
    CHECK(g.edge_count() == 2 * 20);
}

TEST_CASE("a column that wraps onto itself leaves only the empty face", "[grid]") {
    for (int m = 1; m <= 4; ++m) {
        Graph g = build_square_cyl(m, 1);
        CHECK(g.usable_mask() == 0);
        CHECK(alternating_sum(g) == 1);
    }
    CHECK(alternating_sum(build_square_torus(1, 7)) == 1);
}

TEST_CASE("hexagonal cylinder has degrees 2 and 3", "[grid][hex]") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            Graph g = build_hex_cyl(m, n);
            CHECK(g.vertex_count() == 2 * n * (m + 1));
            int deg3 = 0;
            for (int v = 0; v < g.vertex_count(); ++v) {
                CHECK(g.degree(v) >= 2);
                CHECK(g.degree(v) <= 3);
                deg3 += g.degree(v) == 3;
            }
            // one rung per cell column between consecutive rows
            CHECK(g.edge_count() == 2 * n * (m + 1) + n * m);
            CHECK(deg3 == 2 * n * m);
        }
}

TEST_CASE("hexagonal torus is 3-regular with 2mn vertices", "[grid][hex]") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            Graph g = build_hex_torus(m, n);
            CHECK(g.vertex_count() == 2 * m * n);
            CHECK(g.edge_count() == 3 * m * n);
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
        }
}

TEST_CASE("hexagonal graphs are bipartite by parity", "[grid][hex]") {
    for (Graph g : {build_hex_rect(3, 5), build_hex_cyl(3, 3), build_hex_torus(2, 3)}) {
        for (auto [u, v] : g.edges()) {
            auto [ru, cu] = g.coords(u);
            auto [rv, cv] = g.coords(v);
            CHECK((ru + cu) % 2 != (rv + cv) % 2);
        }
    }
}

TEST_CASE("parallelogram edges", "[grid]") {
    Graph g = build_parallelogram(3, 4);
    CHECK(g.edge_count() == 3 * 3 + 2 * 3);
    CHECK(g.has_edge(g.id(1, 1), g.id(1, 2)));
    CHECK(g.has_edge(g.id(2, 1), g.id(1, 2)));
    CHECK_FALSE(g.has_edge(g.id(1, 1), g.id(2, 1)));
}

TEST_CASE("fixing a boundary removes forced particles and their neighbours", "[grid]") {
    Graph p = build_parallelogram(4, 3);
    auto fx = fix_boundary(p, {2}, {});
    CHECK(fx.feasible);
    CHECK(fx.forced_count == 1);
    const Graph& h = fx.graph;
    CHECK_FALSE(h.usable(h.id(2, 1)));
    CHECK_FALSE(h.usable(h.id(2, 2)));  // right neighbour
    CHECK_FALSE(h.usable(h.id(1, 2)));  // diagonal neighbour
    CHECK_FALSE(h.usable(h.id(1, 1)));  // unforced boundary cell
    CHECK(h.usable(h.id(3, 2)));
}

TEST_CASE("two-column parallelogram with touching forced cells is infeasible", "[grid]") {
    Graph p = build_parallelogram(3, 2);
    auto fx = fix_boundary(p, {2}, {1});
    CHECK_FALSE(fx.feasible);
}

TEST_CASE("graph json round trip", "[grid]") {
    Graph g = induced_delete(build_hex_cyl(2, 3), {0, 5});
    g.set_blocked(7);
    Graph h = graph_from_json(to_json(g));
    CHECK(h.edges() == g.edges());
    CHECK(h.blocked(7));
    CHECK_FALSE(h.live(5));
    CHECK(alternating_sum(h) == alternating_sum(g));
}

TEST_CASE("family names round trip", "[grid]") {
    for (Family f : {Family::SquareRect, Family::SquareCyl, Family::SquareTorus, Family::HexRect, Family::HexCyl,
                     Family::HexTorus, Family::Parallelogram})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS(family_from_name("klein_bottle"));
}

TEST_CASE("torus translations act transitively on the square torus", "[grid]") {
    CHECK(torus_translation_orbits(build_square_torus(4, 6)) == 1);
}
