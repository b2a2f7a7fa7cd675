#include <catch_amalgamated.hpp>

#include <random>

#include "indcx/complex.hpp"
#include "indcx/grid.hpp"
#include "indcx/homology.hpp"
#include "support.hpp"

using namespace indcx;

namespace {

// Rank modulo a large prime, by plain row reduction.
long long rank_mod_p(const IntegerMatrix& m) {
    const long long p = 1000003;
    std::vector<std::vector<long long>> a(m.rows, std::vector<long long>(m.cols, 0));
    for (auto& t : m.entries) {
        long long v = static_cast<long long>(t.value % p);
        a[t.row][t.col] = ((a[t.row][t.col] + v) % p + p) % p;
    }
    auto inv = [&](long long x) {
        long long r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    long long rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = static_cast<int>(rank); r < m.rows; ++r)
            if (a[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        long long iv = inv(a[rank][c]);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || !a[r][c]) continue;
            long long f = a[r][c] * iv % p;
            for (int k = c; k < m.cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

SimplicialComplex rp2() {
    std::vector<std::vector<int>> tri = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                         {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    std::vector<Face> gens;
    for (auto& t : tri) gens.push_back(face_from(t));
    return SimplicialComplex::downward_closure(6, gens);
}

}  // namespace

TEST_CASE("boundary of a boundary vanishes", "[homology]") {
    for (auto c : {independence_complex(build_square_cyl(3, 4)), independence_complex(build_hex_rect(3, 4)), rp2()}) {
        for (int k = 1; k <= c.dim(); ++k) {
            auto dd = multiply(boundary_matrix(c, k - 1), boundary_matrix(c, k));
            dd.normalize();
            CHECK(dd.entries.empty());
        }
    }
}

TEST_CASE("Smith normal form of small matrices", "[homology]") {
    auto m = IntegerMatrix::from_dense({{2, 4}, {6, 8}});
    auto d = smith_normal_form(m);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 2);
    CHECK(d[1] == 4);

    auto z = IntegerMatrix::from_dense({{0, 0}, {0, 0}});
    CHECK(smith_normal_form(z).empty());

    // diag(6, 10, 15): gcd of entries 1, of 2x2 minors 30
    auto q = IntegerMatrix::from_dense({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}});
    auto f = smith_normal_form(q);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 1);
    CHECK(f[1] == 30);
    CHECK(f[2] == 30);
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
}

TEST_CASE("sphere and projective plane", "[homology]") {
    auto s2 = SimplicialComplex::downward_closure(
        4, {face_from({0, 1, 2}), face_from({0, 1, 3}), face_from({0, 2, 3}), face_from({1, 2, 3})});
    auto h = homology_profile(s2);
    CHECK(h.betti(2) == 1);
    CHECK(h.betti(1) == 0);
    CHECK(h.betti(0) == 0);
    CHECK_FALSE(h.has_torsion());

    auto p = homology_profile(rp2());
    CHECK(p.betti(0) == 0);
    CHECK(p.betti(1) == 0);
    CHECK(p.betti(2) == 0);
    REQUIRE(p.torsion(1).size() == 1);
    CHECK(p.torsion(1)[0] == 2);
    CHECK(p.table_entry() == "T1:[2]");
}

TEST_CASE("empty-face complex has homology in degree -1", "[homology]") {
    auto e = SimplicialComplex::from_faces(2, {Face{0}});
    auto h = homology_profile(e);
    CHECK(h.betti(-1) == 1);
    // the complete graph on 3 vertices: three points
    auto pts = SimplicialComplex::from_faces(3, {0, bit(0), bit(1), bit(2)});
    CHECK(homology_profile(pts).betti(0) == 2);
}

TEST_CASE("small cylinders", "[homology]") {
    auto h34 = homology_profile(independence_complex(build_square_cyl(3, 4)));
    CHECK(h34.table_entry() == "(2,3)");
    auto h26 = homology_profile(independence_complex(build_square_cyl(2, 6)));
    CHECK(h26.table_entry() == "(2,1)");
    auto h19 = homology_profile(independence_complex(build_square_cyl(1, 9)));
    CHECK(h19.table_entry() == "(2,2)");
}

TEST_CASE("cone is acyclic and suspension shifts", "[homology]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto d = testing_support::random_graph(rng, 14);
        auto c = independence_complex(d.g);
        auto h = homology_profile(c);
        CHECK(homology_profile(cone(c)).is_trivial());
        CHECK(homology_profile(susp(c)) == h.shifted(1));
    }
}

TEST_CASE("reduced Euler characteristic is minus Z", "[homology]") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto d = testing_support::random_graph(rng, 16);
        auto c = independence_complex(d.g);
        auto h = homology_profile(c);
        INFO(family_name(d.family) << " m=" << d.m << " n=" << d.n);
        CHECK(h.euler() == -testing_support::subset_loop_z(d.g));
    }
}

TEST_CASE("Betti numbers agree with ranks modulo a prime", "[homology]") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = testing_support::random_graph(rng, 14);
        auto c = independence_complex(d.g);
        auto h = homology_profile(c);
        for (int k = 0; k <= c.dim(); ++k) {
            long long nk = static_cast<long long>(c.faces(k).size());
            long long rk = rank_mod_p(boundary_matrix(c, k));
            long long rk1 = k + 1 <= c.dim() ? rank_mod_p(boundary_matrix(c, k + 1)) : 0;
            CHECK(h.betti(k) == nk - rk - rk1);
        }
    }
}

TEST_CASE("suspension of Gamma_O when Delta_O is a simplex", "[homology]") {
    Graph g = build_square_cyl(1, 6);
    auto dec = gamma_delta_O(g, checkerboard_odd(g));
    REQUIRE(dec.delta_is_simplex);
    CHECK(homology_profile(independence_complex(g)) == homology_profile(susp(dec.gamma)));
}
