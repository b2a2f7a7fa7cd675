#include <catch_amalgamated.hpp>

#include "indcx/genfun.hpp"
#include "indcx/grid.hpp"
#include "indcx/poly.hpp"
#include "support.hpp"

using namespace indcx;
using testing_support::fib;

namespace {

// T(m) straight from its definition, one entry at a time.
GaussMatrix naive_T(int m) {
    const unsigned d = 1u << m, full = d - 1;
    GaussMatrix t(d, std::vector<GaussInt>(d));
    for (unsigned A = 0; A < d; ++A)
        for (unsigned B = 0; B < d; ++B) {
            unsigned shifted = (B << 1) & full;
            if ((A & B) || (A & shifted)) continue;
            t[A][B] = ipow(__builtin_popcount(A) + __builtin_popcount(B));
        }
    return t;
}

GaussMatrix mul(const GaussMatrix& a, const GaussMatrix& b) {
    const std::size_t d = a.size();
    GaussMatrix c(d, std::vector<GaussInt>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

unsigned reverse_rows(unsigned A, int m) {
    unsigned r = 0;
    for (int j = 0; j < m; ++j)
        if ((A >> j) & 1u) r |= 1u << (m - 1 - j);
    return r;
}

RatPoly gpoly(std::vector<GaussInt> c) {
    std::vector<GaussRat> r;
    for (auto& x : c) r.emplace_back(x);
    return RatPoly(std::move(r));
}

}  // namespace

TEST_CASE("transfer matrix sizes", "[genfun]") {
    for (int m = 1; m <= 7; ++m) {
        CHECK(build_Tm(m).size() == (1u << m));
        CHECK(static_cast<long long>(build_Tpm(m).states.size()) == fib(m + 2));
    }
    CHECK_THROWS(build_Tm(12));
}

TEST_CASE("matrix entries follow the definition", "[genfun]") {
    for (int m = 1; m <= 4; ++m) CHECK(build_Tm(m) == naive_T(m));
}

TEST_CASE("series agree with naive matrix powers", "[genfun]") {
    const int N = 9;
    for (int m = 1; m <= 3; ++m) {
        auto T = naive_T(m);
        const unsigned d = 1u << m;
        std::vector<GaussMatrix> pw{GaussMatrix(d, std::vector<GaussInt>(d))};
        for (unsigned a = 0; a < d; ++a) pw[0][a][a] = 1;
        for (int n = 1; n <= N; ++n) pw.push_back(mul(pw.back(), T));
        auto table = power_table(m, N);
        REQUIRE(table.size() == pw.size());
        for (int n = 0; n <= N; ++n) CHECK(table[n] == pw[n]);
        for (unsigned A = 0; A < d; ++A)
            for (unsigned B = 0; B < d; ++B) {
                auto s = g_series(m, A, B, N);
                for (int n = 0; n <= N; ++n) CHECK(s[n] == pw[n][A][B]);
            }
        auto tr = trace_series(m, N);
        for (int n = 0; n <= N; ++n) {
            GaussInt t = 0;
            for (unsigned a = 0; a < d; ++a) t += pw[n][a][a];
            CHECK(tr[n] == t);
        }
    }
}

TEST_CASE("matrix and boundary paths agree", "[genfun]") {
    for (int m = 1; m <= 4; ++m)
        for (unsigned A = 0; A < (1u << m); ++A)
            for (unsigned B = 0; B < (1u << m); B += 3)
                CHECK(g_series_matrix(m, A, B, 10) == g_series_boundary(m, A, B, 10));
}

TEST_CASE("boundary Z against the fixed-boundary parallelogram", "[genfun]") {
    for (int m = 1; m <= 4; ++m)
        for (int cols = 2; cols <= 5; ++cols)
            for (unsigned A = 0; A < (1u << m); ++A)
                for (unsigned B = 0; B < (1u << m); ++B) {
                    auto fx = fix_boundary_mask(build_parallelogram(m, cols), A, B);
                    long long want = 0;
                    if (fx.feasible)
                        want = (fx.forced_count % 2 ? -1 : 1) * testing_support::subset_loop_z(fx.graph);
                    INFO("m=" << m << " cols=" << cols << " A=" << A << " B=" << B);
                    CHECK(boundary_z(m, cols, A, B) == want);
                }
}

TEST_CASE("single column boundary", "[genfun]") {
    CHECK(boundary_z(3, 1, 0b101, 0b101) == 1);
    CHECK(boundary_z(3, 1, 0b100, 0b100) == -1);
    CHECK(boundary_z(3, 1, 0b100, 0b001) == 0);
}

TEST_CASE("diagonal series are symmetric under row reversal", "[genfun]") {
    for (int m = 2; m <= 5; ++m)
        for (unsigned A = 0; A < (1u << m); ++A)
            CHECK(g_series(m, A, A, 16) == g_series(m, reverse_rows(A, m), reverse_rows(A, m), 16));
}

TEST_CASE("fitted rational functions re-expand to the series", "[genfun]") {
    for (unsigned B : {0u, 0b0110u, 0b1011u}) {
        auto s = g_series(4, 0, B, 40);
        auto f = rational_fit(s, 14, 20);
        REQUIRE(f.has_value());
        auto e = f->series(41);
        for (int k = 0; k <= 40; ++k) CHECK(e[k] == GaussRat(s[k]));
    }
}

TEST_CASE("a boundary particle in the last row gives it / (1 + t^3)", "[genfun]") {
    auto s = g_series(4, 0, row_mask({4}), 40);
    auto f = rational_fit(s, 14, 20);
    REQUIRE(f.has_value());
    RationalQi want(gpoly({0, GaussInt::I()}), to_rat_poly(to_gauss_poly(one_plus_t_pow(3))));
    CHECK(*f == want);
    CHECK(s[1] == GaussInt::I());
}

TEST_CASE("a series without a short recurrence is not fitted", "[genfun]") {
    // coefficients of a sequence that grows too fast for degree 2 over degree 2
    std::vector<GaussInt> s;
    for (int k = 0; k < 12; ++k) s.push_back(GaussInt(BigInt(1) << (k * k)));
    CHECK_FALSE(rational_fit(s, 2, 2).has_value());
}

TEST_CASE("spectra of the full and path transfer matrices", "[genfun]") {
    for (int m = 1; m <= 5; ++m) {
        auto r = spectra_match(m, 16);
        INFO("m=" << m << " " << r.message);
        CHECK(r.ok);
        CHECK(r.extra_zeros == (1 << m) - fib(m + 2));
    }
}

TEST_CASE("row masks", "[genfun]") {
    CHECK(row_mask({1, 3}) == 0b101u);
    CHECK(mask_rows(0b110u) == std::vector<int>{2, 3});
    CHECK(set_str(0) == "{}");
}

TEST_CASE("column recursions and diagonal pairs summing to 2", "[genfun]") {
    auto l = lemma11_check(5, 20);
    CHECK(l.ok);
    CHECK_FALSE(l.items.empty());
    auto r = recursion_checks(4, 20);
    CHECK(r.ok);
}
