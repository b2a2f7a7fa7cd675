#include <catch_amalgamated.hpp>

#include <numeric>

#include "indcx/poly.hpp"

using namespace indcx;

TEST_CASE("Gaussian integer arithmetic", "[poly]") {
    GaussInt i = GaussInt::I();
    CHECK(i * i == GaussInt(-1));
    CHECK(ipow(4) == GaussInt(1));
    CHECK(ipow(-1) == GaussInt(0, -1));
    CHECK(ipow(7) == GaussInt(0, -1));
    GaussInt a(3, 4);
    CHECK(a.norm() == 25);
    CHECK(a * a.conj() == GaussInt(25));
    CHECK(exact_div(GaussInt(25), a) == a.conj());
    CHECK_THROWS(exact_div(GaussInt(1), GaussInt(2)));
    CHECK(GaussInt(0, -1).is_unit());
    CHECK_FALSE(GaussInt(1, 1).is_unit());
}

TEST_CASE("product of cyclotomic polynomials over divisors", "[poly]") {
    for (int n = 1; n <= 30; ++n) {
        IntPoly p = int_poly({1});
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) p = p * cyclotomic(d);
        CHECK(p == IntPoly::monomial(BigInt(1), n) - IntPoly::constant(BigInt(1)));
    }
    CHECK(cyclotomic(6) == int_poly({1, -1, 1}));
    CHECK(cyclotomic(12) == int_poly({1, 0, -1, 0, 1}));
}

TEST_CASE("integer long division", "[poly]") {
    IntPoly a = int_poly({-1, 0, 0, 0, 0, 0, 1});  // t^6 - 1
    auto [q, r] = divmod(a, int_poly({1, 1}));
    CHECK(r.is_zero());
    CHECK(q * int_poly({1, 1}) == a);
    auto [q2, r2] = divmod(int_poly({1, 0, 1}), int_poly({-1, 1}));
    CHECK(q2 == int_poly({1, 1}));
    CHECK(r2 == int_poly({2}));
    CHECK_THROWS(divmod(int_poly({1, 0, 1}), int_poly({1, 2})));
}

TEST_CASE("power series of 1/(1 - t + t^2) has period six", "[poly]") {
    RationalQi f = ratfun(int_poly({1}), int_poly({1, -1, 1}));
    auto s = f.series(24);
    const long long want[6] = {1, 1, 0, -1, -1, 0};
    for (int k = 0; k < 24; ++k) CHECK(s[k] == GaussRat(want[k % 6]));
}

TEST_CASE("rational functions reduce by the gcd", "[poly]") {
    // (1 - t^2) / (1 - t^4) = 1 / (1 + t^2)
    RationalQi f = ratfun(one_minus_t_pow(2), one_minus_t_pow(4));
    CHECK(f == ratfun(int_poly({1}), one_plus_t_pow(2)));
    CHECK(f.den().degree() == 2);
}

TEST_CASE("1/(1 - it) + 1/(1 + it) = 2/(1 + t^2)", "[poly]") {
    RatPoly one = RatPoly::constant(GaussRat(1));
    RatPoly a(std::vector<GaussRat>{GaussRat(1), GaussRat(BigRat(0), BigRat(-1))});
    RatPoly b(std::vector<GaussRat>{GaussRat(1), GaussRat(BigRat(0), BigRat(1))});
    RationalQi s = RationalQi(one, a) + RationalQi(one, b);
    CHECK(s == ratfun(int_poly({2}), one_plus_t_pow(2)));
    auto c = s.series(10);
    for (int k = 0; k < 10; ++k) CHECK(c[k] == GaussRat(k % 2 ? 0 : (k % 4 ? -2 : 2)));
}

TEST_CASE("gcd over Q(i)", "[poly]") {
    RatPoly p = to_rat_poly(to_gauss_poly(int_poly({-1, 0, 1})));  // t^2 - 1
    RatPoly q = to_rat_poly(to_gauss_poly(int_poly({1, 2, 1})));   // (t + 1)^2
    RatPoly g = gcd(p, q);
    CHECK(g.degree() == 1);
    auto [qq, rr] = divmod(p, g);
    CHECK(rr.is_zero());
}

TEST_CASE("strip, reciprocal and evaluation", "[poly]") {
    IntPoly p = int_poly({0, 0, 1, 2, 3});
    CHECK(p.valuation() == 2);
    CHECK(p.strip() == int_poly({1, 2, 3}));
    CHECK(p.strip().reciprocal() == int_poly({3, 2, 1}));
    CHECK(p.eval(BigInt(2)) == 4 + 16 + 48);
    CHECK(int_poly({1, -1, 1}).str() == "1 - t + t^2");
}
