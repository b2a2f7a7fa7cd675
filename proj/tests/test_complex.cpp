#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "indcx/complex.hpp"
#include "indcx/grid.hpp"
#include "support.hpp"

using namespace indcx;
using testing_support::subset_loop_z;

namespace {

long long cycle_z(int n) {
    switch (n % 3) {
        case 0: return (n / 3) % 2 ? -2 : 2;
        case 1: return ((n - 1) / 3) % 2 ? -1 : 1;
        default: return ((n + 1) / 3) % 2 ? -1 : 1;
    }
}

}  // namespace

TEST_CASE("alternating sum agrees with a plain subset loop", "[complex]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        auto d = testing_support::random_graph(rng, 20);
        long long cnt = 0;
        long long z = subset_loop_z(d.g, &cnt);
        INFO(family_name(d.family) << " m=" << d.m << " n=" << d.n);
        CHECK(alternating_sum(d.g) == z);
        CHECK(alternating_sum_enumerated(d.g) == z);
        CHECK(count_independent_sets(d.g) == static_cast<std::size_t>(cnt));
        CHECK(partition_function(d.g, 1) == cnt);
        CHECK(partition_function(d.g, -1) == z);
    }
}

TEST_CASE("enumeration visits each independent set once", "[complex]") {
    Graph g = build_hex_rect(3, 4);
    std::vector<Face> seen;
    enumerate_independent_sets(g, [&](Face f) { seen.push_back(f); });
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    for (Face f : seen) CHECK(g.is_independent(f));
    long long cnt;
    subset_loop_z(g, &cnt);
    CHECK(static_cast<long long>(seen.size()) == cnt);
}

TEST_CASE("cycles follow the period-twelve pattern", "[complex]") {
    for (int n = 3; n <= 30; ++n) {
        INFO("n=" << n);
        CHECK(alternating_sum(build_square_cyl(1, n)) == cycle_z(n));
    }
}

TEST_CASE("paths satisfy the end-vertex recurrence", "[complex]") {
    // Z(G) = Z(G - v) - Z(G - N[v]) at an end vertex v
    long long a = 0, b = -1;  // P_1, P_2
    CHECK(alternating_sum(build_square_rect(1, 1)) == a);
    CHECK(alternating_sum(build_square_rect(1, 2)) == b);
    for (int n = 3; n <= 40; ++n) {
        long long c = b - a;
        a = b;
        b = c;
        CHECK(alternating_sum(build_square_rect(1, n)) == b);
    }
}

TEST_CASE("independence complex is downward closed and matches Z", "[complex]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto d = testing_support::random_graph(rng, 16);
        auto c = independence_complex(d.g);
        CHECK(c.is_downward_closed());
        CHECK(-c.reduced_euler() == subset_loop_z(d.g));
    }
}

TEST_CASE("face budget is enforced", "[complex]") {
    CHECK_THROWS_AS(independence_complex(build_square_rect(5, 5), 1000), BudgetExceeded);
}

TEST_CASE("cone and suspension on small complexes", "[complex]") {
    auto c = SimplicialComplex::downward_closure(3, {face_from({0, 1}), face_from({2})});
    auto k = cone(c);
    CHECK(k.ground_size() == 4);
    CHECK(k.reduced_euler() == 0);
    auto s = susp(c);
    CHECK(s.ground_size() == 5);
    CHECK(s.reduced_euler() == -c.reduced_euler());
    CHECK(s.dim() == c.dim() + 1);
}

TEST_CASE("void complex and the empty-face complex", "[complex]") {
    SimplicialComplex v(3);
    v.finalize();
    CHECK(v.is_void());
    CHECK(v.reduced_euler() == 0);
    auto e = SimplicialComplex::from_faces(3, {Face{0}});
    CHECK(e.dim() == -1);
    CHECK(e.reduced_euler() == -1);
}

TEST_CASE("text round trip", "[complex]") {
    auto c = independence_complex(build_hex_cyl(1, 3));
    auto d = complex_from_text(to_text(c));
    CHECK(d.all_faces() == c.all_faces());
    CHECK(d.facets() == c.facets());
}

TEST_CASE("odd checkerboard set on even cylinders", "[complex]") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 6; n += 2) {
            Graph g = build_square_cyl(m, n);
            Face O = checkerboard_odd(g);
            CHECK(g.is_independent(O));
            CHECK(face_size(O) == m * n / 2);
            auto dec = gamma_delta_O(g, O);
            INFO("m=" << m << " n=" << n);
            // O is never free in a face of X, so X misses O; X is an up-set of Delta_O
            for (Face x : dec.X) CHECK((x & O) == 0);
            CHECK(dec.gamma.is_downward_closed());
        }
}

TEST_CASE("Delta_O is a simplex for the full checkerboard on a 1-row cylinder", "[complex]") {
    Graph g = build_square_cyl(1, 6);
    auto dec = gamma_delta_O(g, checkerboard_odd(g));
    CHECK(dec.delta_is_simplex);
}
