#pragma once

// Published closed forms for the strip generating functions and the
// characteristic polynomials they explain.

#include <string>
#include <vector>

#include "indcx/poly.hpp"

namespace indcx::ref {

struct QuotedForm {
    int m;
    std::vector<int> A, B;  // 1-based rows
    RationalQi g;
    std::string text;
};

inline IntPoly ip(const std::vector<long long>& c) { return int_poly(c); }
inline RationalQi rf(const std::vector<long long>& num, const IntPoly& den) { return ratfun(ip(num), den); }
inline RationalQi rconst(long long c) { return ratfun(ip({c}), ip({1})); }
// i times an integer polynomial over an integer polynomial.
inline RationalQi rf_i(const std::vector<long long>& num, const IntPoly& den) {
    std::vector<GaussRat> c;
    for (long long x : num) c.push_back(GaussRat(BigRat(0), BigRat(x)));
    return RationalQi(RatPoly(c), to_rat_poly(to_gauss_poly(den)));
}

inline std::vector<QuotedForm> quoted_forms() {
    const IntPoly p3 = one_plus_t_pow(3), m4 = one_minus_t_pow(4), m14 = one_minus_t_pow(14);
    const IntPoly h = ip({1, -1, 1});
    const IntPoly d34 = p3 * m4;
    std::vector<QuotedForm> out;
    out.push_back({4, {}, {}, rf({1}, h), "1/(1-t+t^2)"});
    out.push_back({4, {2, 3}, {2, 3}, rf({1, 0, 1, 1}, d34), "(1+t^2+t^3)/((1+t^3)(1-t^4))"});
    out.push_back({4, {1, 2, 4}, {1, 2, 4}, rf({1, -1}, h), "(1-t)/(1-t+t^2)"});
    for (int r = 1; r <= 4; ++r)
        out.push_back({4, {r}, {r}, rf({1, 0, 0, 1, 0, 1}, d34), "(1+t^3+t^5)/((1+t^3)(1-t^4))"});
    out.push_back({4, {1, 4}, {1, 4},
                   (rf({1, 0, 1, 0, 1}, ip({1})) + rf({0, 0, 1}, p3) - rf({0, 0, 1, 0, 1}, ip({1}))) * rf({1}, m4),
                   "(1+t^2+t^4+t^2/(1+t^3)-t^2-t^4)/(1-t^4)"});
    for (auto ab : {std::vector<int>{1, 2}, std::vector<int>{3, 4}})
        out.push_back({4, ab, ab, rconst(1) - rf({0, 0, 0, 0, 0, 1}, d34), "1-t^5/((1+t^3)(1-t^4))"});

    // 1/(1-t^14) (1 + t + t^3 (1-t^12)/(1-t^3))
    RationalQi g00 = (rf({1, 1}, ip({1})) + rf({0, 0, 0, 1}, ip({1})) * ratfun(one_minus_t_pow(12), one_minus_t_pow(3))) *
                     rf({1}, m14);
    out.push_back({6, {}, {}, g00, "(1+t+t^3(1-t^12)/(1-t^3))/(1-t^14)"});
    out.push_back({6, {2}, {2, 3, 6}, rf({0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1}, m14), "t^4(1+t^3+t^6)/(1-t^14)"});
    out.push_back({6, {}, {2, 3, 6}, rf_i({0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1}, m14), "-i(t+t^4+t^12)/(1-t^14)"});
    out.push_back({6, {2, 3, 6}, {2, 3, 6},
                   ratfun(ip({1, 1, 0, 0, 0, -1, -1, -1, 0, 0, 0, 1, 1}) * ip({1, -1}), m14 * m4),
                   "(1+t-t^5-t^6-t^7+t^11+t^12)(1-t)/((1-t^14)(1-t^4))"});
    return out;
}

// Partial fractions of sum_A G_{A,A} for m = 4; the conjugate pair of roots
// of 1 - t + t^2 is kept as (2-t)/(1-t+t^2).
inline RationalQi trace_partial_fractions_m4() {
    RationalQi one_minus_it(RatPoly(std::vector<GaussRat>{GaussRat(1), GaussRat(BigRat(0), BigRat(-1))}),
                            RatPoly(std::vector<GaussRat>{GaussRat(1)}));
    RationalQi one_plus_it(RatPoly(std::vector<GaussRat>{GaussRat(1), GaussRat(BigRat(0), BigRat(1))}),
                           RatPoly(std::vector<GaussRat>{GaussRat(1)}));
    return rconst(8) + rconst(1) / one_minus_it + rconst(1) / one_plus_it + rf({2}, ip({1, 1})) +
           rf({2}, ip({1, -1})) + rf({2, -1}, ip({1, -1, 1}));
}

// t-stripped characteristic polynomials of T'(m), written in 1 - ... form.
inline IntPoly tprime_charpoly(int m) {
    if (m == 4) return ip({1, -1, 1}) * one_minus_t_pow(2) * one_minus_t_pow(4);
    if (m == 6) {
        auto q = one_minus_t_pow(4) * one_minus_t_pow(4) * one_minus_t_pow(14);
        return divmod(q, ip({1, 1})).first;
    }
    return IntPoly();
}

}  // namespace indcx::ref
