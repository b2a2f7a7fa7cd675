#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "indcx/types.hpp"

namespace indcx {

using BigRat = boost::multiprecision::cpp_rational;

// Gaussian integer a + b i.
struct GaussInt {
    BigInt re = 0;
    BigInt im = 0;

    GaussInt() = default;
    GaussInt(long long r) : re(r) {}  // NOLINT: implicit from integers is intended
    GaussInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt I() { return {0, 1}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_unit() const;
    GaussInt conj() const { return {re, -im}; }
    BigInt norm() const { return re * re + im * im; }

    GaussInt& operator+=(const GaussInt& o);
    GaussInt& operator-=(const GaussInt& o);
    GaussInt& operator*=(const GaussInt& o);
    std::string str() const;
};

GaussInt operator+(GaussInt a, const GaussInt& b);
GaussInt operator-(GaussInt a, const GaussInt& b);
GaussInt operator-(const GaussInt& a);
GaussInt operator*(GaussInt a, const GaussInt& b);
bool operator==(const GaussInt& a, const GaussInt& b);
// i^k for any integer k.
GaussInt ipow(long long k);
// Exact quotient; throws std::domain_error when b does not divide a.
GaussInt exact_div(const GaussInt& a, const GaussInt& b);
BigInt exact_div(const BigInt& a, const BigInt& b);

// Element of Q(i).
struct GaussRat {
    BigRat re = 0;
    BigRat im = 0;

    GaussRat() = default;
    GaussRat(long long r) : re(r) {}  // NOLINT
    GaussRat(BigRat r, BigRat i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(const GaussInt& z) : re(z.re), im(z.im) {}  // NOLINT

    bool is_zero() const { return re == 0 && im == 0; }
    // Numerator over a common positive integer denominator.
    std::pair<GaussInt, BigInt> split() const;
    std::string str() const;
};

GaussRat operator+(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);
bool operator==(const GaussRat& a, const GaussRat& b);

inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_zero(const GaussInt& x) { return x.is_zero(); }
inline bool is_zero(const GaussRat& x) { return x.is_zero(); }
inline std::string coef_str(const BigInt& x) { return x.str(); }
inline std::string coef_str(const GaussInt& x) { return x.str(); }
inline std::string coef_str(const GaussRat& x) { return x.str(); }

/**
 * Polynomial in t, coefficients ascending, trailing zeros trimmed. The zero
 * polynomial has no coefficients and degree -1.
 */
template <class R>
class Poly {
public:
    Poly() = default;
    Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }  // NOLINT
    static Poly constant(const R& a) { return Poly(std::vector<R>{a}); }
    static Poly monomial(const R& a, int k) {
        std::vector<R> c(k + 1, R(0));
        c[k] = a;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    R operator[](int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : R(0); }
    const R& lead() const { return c_.back(); }
    // Lowest power of t with a nonzero coefficient (0 for the zero polynomial).
    int valuation() const {
        for (int k = 0; k < static_cast<int>(c_.size()); ++k)
            if (!indcx::is_zero(c_[k])) return k;
        return 0;
    }
    // Divide out the largest power of t.
    Poly strip() const {
        int v = valuation();
        return Poly(std::vector<R>(c_.begin() + v, c_.end()));
    }
    // t^deg p(1/t)
    Poly reciprocal() const {
        std::vector<R> c(c_.rbegin(), c_.rend());
        return Poly(std::move(c));
    }
    Poly truncated(int n) const {
        if (static_cast<int>(c_.size()) <= n) return *this;
        return Poly(std::vector<R>(c_.begin(), c_.begin() + n));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (indcx::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const R& s, const Poly& p) { return Poly::constant(s) * p; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    R eval(const R& x) const {
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /**
     * Long division. `div` divides a leading coefficient exactly (for rings)
     * or is field division; throws if the quotient does not exist.
     */
    template <class Div>
    std::pair<Poly, Poly> divmod(const Poly& d, Div&& div) const {
        if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
        std::vector<R> r = c_;
        int dd = d.degree();
        std::vector<R> q(std::max(degree() - dd + 1, 0), R(0));
        for (int k = degree(); k >= dd; --k) {
            if (indcx::is_zero(r[k])) continue;
            R f = div(r[k], d.lead());
            q[k - dd] = f;
            for (int j = 0; j <= dd; ++j) r[k - dd + j] = r[k - dd + j] - f * d.c_[j];
        }
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    // Human-readable form such as "1 - t + t^2".
    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && indcx::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

using IntPoly = Poly<BigInt>;
using GaussPoly = Poly<GaussInt>;
using RatPoly = Poly<GaussRat>;

// Exact division over Z; throws if not exact.
std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly gcd(RatPoly a, RatPoly b);

IntPoly int_poly(const std::vector<long long>& c);
// Gaussian polynomial with zero imaginary parts, or throws.
IntPoly to_int_poly(const GaussPoly& p);
GaussPoly to_gauss_poly(const IntPoly& p);
RatPoly to_rat_poly(const GaussPoly& p);
IntPoly one_minus_t_pow(int k);  // 1 - t^k
IntPoly one_plus_t_pow(int k);   // 1 + t^k

// n-th cyclotomic polynomial.
IntPoly cyclotomic(int n);

/**
 * Rational function over Q(i): gcd-reduced, denominator scaled so that its
 * lowest nonzero coefficient is 1.
 */
class RationalQi {
public:
    RationalQi() : num_(), den_(RatPoly::constant(GaussRat(1))) {}
    RationalQi(RatPoly num, RatPoly den);

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    // First n power-series coefficients; requires den(0) != 0.
    std::vector<GaussRat> series(int n) const;
    std::string str() const;
    std::string json() const;
    friend bool operator==(const RationalQi& a, const RationalQi& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RatPoly num_, den_;
};

RationalQi operator+(const RationalQi& a, const RationalQi& b);
RationalQi operator-(const RationalQi& a, const RationalQi& b);
RationalQi operator*(const RationalQi& a, const RationalQi& b);
RationalQi operator/(const RationalQi& a, const RationalQi& b);
// Rational function with integer-coefficient numerator and denominator.
RationalQi ratfun(const IntPoly& num, const IntPoly& den);

template <class R>
std::string Poly<R>::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (indcx::is_zero(c_[k])) continue;
        std::string s = coef_str(c_[k]);
        // a plain real coefficient carries its own sign; anything else is bracketed
        bool plain = s.find_first_of("+-i/", 1) == std::string::npos && s.find('i') == std::string::npos;
        bool neg = plain && s[0] == '-';
        if (neg) s = s.substr(1);
        if (!plain) s = "(" + s + ")";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string term = (k > 0 && s == "1") ? mono : (k == 0 ? s : s + "*" + mono);
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace indcx
