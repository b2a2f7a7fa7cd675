#include "indcx/poly.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace indcx {

bool GaussInt::is_unit() const { return norm() == 1; }

GaussInt& GaussInt::operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
    BigInt r = re * o.re - im * o.im;
    BigInt i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string GaussInt::str() const {
    if (im == 0) return re.str();
    std::string ims = (im == 1) ? "i" : (im == -1) ? "-i" : im.str() + "i";
    if (re == 0) return ims;
    return re.str() + (im > 0 ? "+" : "") + ims;
}

GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }

GaussInt ipow(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("division by zero");
    BigInt q = a / b;
    if (q * b != a) throw std::domain_error("inexact integer division");
    return q;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (b.im == 0) return {exact_div(a.re, b.re), exact_div(a.im, b.re)};
    GaussInt num = a * b.conj();
    BigInt n = b.norm();
    return {exact_div(num.re, n), exact_div(num.im, n)};
}

std::pair<GaussInt, BigInt> GaussRat::split() const {
    BigInt d = boost::multiprecision::lcm(denominator(re), denominator(im));
    BigInt a = numerator(re) * (d / denominator(re));
    BigInt b = numerator(im) * (d / denominator(im));
    return {GaussInt(a, b), d};
}

std::string GaussRat::str() const {
    auto q = [](const BigRat& x) { return denominator(x) == 1 ? numerator(x).str() : x.str(); };
    if (im == 0) return q(re);
    std::string ims = (im == 1) ? "i" : (im == -1) ? "-i" : q(im) + "i";
    if (re == 0) return ims;
    return q(re) + (im > 0 ? "+" : "") + ims;
}

GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    BigRat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) {
    return a.divmod(b, [](const BigInt& x, const BigInt& y) { return exact_div(x, y); });
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    return a.divmod(b, [](const GaussRat& x, const GaussRat& y) { return x / y; });
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return RatPoly::constant(GaussRat(1) / a.lead()) * a;  // monic
}

IntPoly int_poly(const std::vector<long long>& c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}

IntPoly to_int_poly(const GaussPoly& p) {
    std::vector<BigInt> v;
    for (auto& z : p.coeffs()) {
        if (!z.is_real()) throw std::domain_error("polynomial has non-real coefficients");
        v.push_back(z.re);
    }
    return IntPoly(std::move(v));
}

GaussPoly to_gauss_poly(const IntPoly& p) {
    std::vector<GaussInt> v;
    for (auto& x : p.coeffs()) v.emplace_back(x);
    return GaussPoly(std::move(v));
}

RatPoly to_rat_poly(const GaussPoly& p) {
    std::vector<GaussRat> v;
    for (auto& z : p.coeffs()) v.emplace_back(z);
    return RatPoly(std::move(v));
}

IntPoly one_minus_t_pow(int k) {
    std::vector<BigInt> c(k + 1, 0);
    c[0] += 1;
    c[k] -= 1;
    return IntPoly(std::move(c));
}

IntPoly one_plus_t_pow(int k) {
    std::vector<BigInt> c(k + 1, 0);
    c[0] += 1;
    c[k] += 1;
    return IntPoly(std::move(c));
}

IntPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
    // t^n - 1 divided by every Phi_d with d a proper divisor of n
    IntPoly p = -one_minus_t_pow(n);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) {
            auto [q, r] = divmod(p, cyclotomic(d));
            if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
            p = q;
        }
    return p;
}

RationalQi::RationalQi(RatPoly num, RatPoly den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    RatPoly g = gcd(num, den);
    if (!num.is_zero() && g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    if (num.is_zero()) den = RatPoly::constant(GaussRat(1));
    // common powers of t cancel too (gcd already took them); normalise the scale
    GaussRat s = GaussRat(1) / den[den.valuation()];
    num_ = RatPoly::constant(s) * num;
    den_ = RatPoly::constant(s) * den;
}

std::vector<GaussRat> RationalQi::series(int n) const {
    if (den_[0].is_zero()) throw std::domain_error("denominator vanishes at t = 0");
    std::vector<GaussRat> out(n, GaussRat(0));
    GaussRat inv = GaussRat(1) / den_[0];
    for (int k = 0; k < n; ++k) {
        GaussRat acc = num_[k];
        for (int j = 1; j <= std::min(k, den_.degree()); ++j) acc = acc - den_[j] * out[k - j];
        out[k] = acc * inv;
    }
    return out;
}

std::string RationalQi::str() const {
    if (den_.degree() == 0 && den_[0] == GaussRat(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::string RationalQi::json() const {
    auto arr = [](const RatPoly& p) {
        auto a = nlohmann::json::array();
        for (auto& c : p.coeffs()) a.push_back(c.str());
        return a;
    };
    return nlohmann::json{{"num", arr(num_)}, {"den", arr(den_)}}.dump();
}

RationalQi operator+(const RationalQi& a, const RationalQi& b) {
    return {a.num() * b.den() + b.num() * a.den(), a.den() * b.den()};
}
RationalQi operator-(const RationalQi& a, const RationalQi& b) {
    return {a.num() * b.den() - b.num() * a.den(), a.den() * b.den()};
}
RationalQi operator*(const RationalQi& a, const RationalQi& b) { return {a.num() * b.num(), a.den() * b.den()}; }
RationalQi operator/(const RationalQi& a, const RationalQi& b) {
    if (b.num().is_zero()) throw std::domain_error("division by zero rational function");
    return {a.num() * b.den(), a.den() * b.num()};
}

RationalQi ratfun(const IntPoly& num, const IntPoly& den) {
    return {to_rat_poly(to_gauss_poly(num)), to_rat_poly(to_gauss_poly(den))};
}

}  // namespace indcx
