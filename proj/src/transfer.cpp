#include "indcx/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace indcx {

std::vector<std::vector<BigInt>> TransferMatrix::big() const {
    std::vector<std::vector<BigInt>> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i].assign(a[i].begin(), a[i].end());
    return out;
}

namespace {

// Subsets of `bits` positions with no two adjacent in the given edge list.
std::vector<Face> independent_patterns(int bits, const std::vector<std::pair<int, int>>& edges, std::size_t cap) {
    std::vector<Face> out;
    for (Face s = 0; s < (Face{1} << bits); ++s) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (has(s, u) && has(s, v)) {
                ok = false;
                break;
            }
        if (ok) {
            out.push_back(s);
            if (out.size() > cap) throw BudgetExceeded("transfer state space exceeds cap");
        }
    }
    return out;
}

long long sign_pow(long long z, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

}  // namespace

TransferMatrix build_transfer_square(int m, long long z, std::size_t cap) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (m > 40) throw BudgetExceeded("column too tall for the transfer matrix");
    // independent sets of the m-path, generated directly (no 2^m scan)
    std::vector<Face> st{0};
    {
        std::vector<Face> a{0}, b{0, 1};  // patterns on 0 and 1 rows
        if (m == 1) st = b;
        for (int r = 2; r <= m; ++r) {
            std::vector<Face> c = b;
            for (Face s : a) c.push_back(s | bit(r - 1));
            if (c.size() > cap) throw BudgetExceeded("transfer state space exceeds cap");
            a = std::move(b);
            b = std::move(c);
            st = b;
        }
    }
    std::sort(st.begin(), st.end());
    TransferMatrix t;
    t.label = "square m=" + std::to_string(m);
    t.states = st;
    t.a.assign(st.size(), std::vector<long long>(st.size(), 0));
    for (std::size_t i = 0; i < st.size(); ++i)
        for (std::size_t j = 0; j < st.size(); ++j)
            if ((st[i] & st[j]) == 0) t.a[i][j] = sign_pow(z, face_size(st[j]));
    return t;
}

TransferMatrix build_transfer_hex(int m, HexVariant v, std::size_t cap) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    TransferMatrix t;
    if (v == HexVariant::Cylinder) {
        const int rows = m + 1;
        if (rows > 40) throw BudgetExceeded("column too tall");
        std::vector<std::pair<int, int>> e0, e1;
        for (int r = 0; r + 1 < rows; ++r) (r % 2 == 0 ? e0 : e1).push_back({r, r + 1});
        auto s0 = independent_patterns(rows, e0, cap);
        auto s1 = independent_patterns(rows, e1, cap);
        // A: even column -> odd column, B: odd -> even
        std::vector<std::vector<long long>> A(s0.size(), std::vector<long long>(s1.size(), 0));
        for (std::size_t i = 0; i < s0.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
                if ((s0[i] & s1[j]) == 0) A[i][j] = (face_size(s1[j]) % 2) ? -1 : 1;
        t.label = "hex cylinder m=" + std::to_string(m);
        t.states = s0;
        t.a.assign(s0.size(), std::vector<long long>(s0.size(), 0));
        for (std::size_t i = 0; i < s0.size(); ++i)
            for (std::size_t k = 0; k < s1.size(); ++k) {
                if (!A[i][k]) continue;
                for (std::size_t j = 0; j < s0.size(); ++j)
                    if ((s1[k] & s0[j]) == 0) t.a[i][j] += A[i][k] * ((face_size(s0[j]) % 2) ? -1 : 1);
            }
        return t;
    }
    const int w = 2 * m;
    if (w > 40) throw BudgetExceeded("column too tall");
    std::vector<std::pair<int, int>> cyc;
    for (int p = 0; p < w; ++p) {
        int q = (p + 1) % w;
        if (p != q && !(w == 2 && p == 1)) cyc.push_back({p, q});
    }
    auto st = independent_patterns(w, cyc, cap);
    t.label = "hex torus m=" + std::to_string(m);
    t.states = st;
    t.a.assign(st.size(), std::vector<long long>(st.size(), 0));
    for (std::size_t i = 0; i < st.size(); ++i)
        for (std::size_t j = 0; j < st.size(); ++j) {
            bool ok = true;
            for (int a = 0; a < m && ok; ++a)
                if (has(st[i], 2 * a + 1) && has(st[j], 2 * a)) ok = false;
            if (ok) t.a[i][j] = (face_size(st[j]) % 2) ? -1 : 1;
        }
    return t;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s && comp; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) comp = false;
        }
        if (comp) return false;
    }
    return true;
}

// Primes just below 2^61, largest first.
std::vector<u64> primes_below_2_61(std::size_t k) {
    static std::vector<u64> cache;
    u64 c = cache.empty() ? (u64{1} << 61) - 1 : cache.back() - 2;
    while (cache.size() < k) {
        while (!is_prime(c)) c -= 2;
        cache.push_back(c);
        c -= 2;
    }
    return {cache.begin(), cache.begin() + k};
}

std::vector<BigInt> traces_mod(const TransferMatrix& t, int nmax, u64 p) {
    const int d = t.dim();
    // sparse copy of T mod p
    std::vector<std::vector<std::pair<int, u64>>> rows(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (long long v = t.a[i][j]) {
                long long r = v % static_cast<long long>(p);
                rows[i].push_back({j, static_cast<u64>(r < 0 ? r + static_cast<long long>(p) : r)});
            }
    std::vector<u64> P(static_cast<std::size_t>(d) * d, 0), Q(P.size());
    for (int i = 0; i < d; ++i) P[static_cast<std::size_t>(i) * d + i] = 1;
    std::vector<u128> acc(d);
    std::vector<BigInt> out;
    for (int n = 1; n <= nmax; ++n) {
        // Q = P T, rows of P times sparse T
        for (int i = 0; i < d; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            const u64* pr = &P[static_cast<std::size_t>(i) * d];
            int pending = 0;
            for (int k = 0; k < d; ++k) {
                if (!pr[k]) continue;
                for (auto [j, v] : rows[k]) acc[j] += (u128)pr[k] * v;
                if (++pending == 32) {
                    for (auto& x : acc) x %= p;
                    pending = 0;
                }
            }
            u64* qr = &Q[static_cast<std::size_t>(i) * d];
            for (int j = 0; j < d; ++j) qr[j] = static_cast<u64>(acc[j] % p);
        }
        P.swap(Q);
        u128 tr = 0;
        for (int i = 0; i < d; ++i) tr += P[static_cast<std::size_t>(i) * d + i];
        out.push_back(BigInt(static_cast<u64>(tr % p)));
    }
    return out;
}

}  // namespace

std::vector<BigInt> power_traces(const TransferMatrix& t, int nmax) {
    if (nmax < 1) return {};
    const int d = t.dim();
    long long l1 = 1;
    for (auto& r : t.a) {
        long long s = 0;
        for (long long v : r) s += std::llabs(v);
        l1 = std::max(l1, s);
    }
    double bits = std::log2(std::max(d, 1)) + nmax * std::log2(static_cast<double>(l1)) + 2;
    std::size_t k = static_cast<std::size_t>(std::ceil(bits / 60.0)) + 1;
    auto primes = primes_below_2_61(k);
    std::vector<std::vector<BigInt>> res;
    for (u64 p : primes) res.push_back(traces_mod(t, nmax, p));
    // CRT into the symmetric range
    std::vector<BigInt> out(nmax);
    BigInt M = 1;
    for (u64 p : primes) M *= p;
    for (int n = 0; n < nmax; ++n) {
        BigInt x = 0, mod = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            BigInt p = primes[i];
            // x + mod * y = r (mod p)
            BigInt r = (res[i][n] - x % p + p) % p;
            BigInt inv = BigInt(powmod(static_cast<u64>(mod % p), primes[i] - 2, primes[i]));
            BigInt y = r * inv % p;
            x += mod * y;
            mod *= p;
        }
        if (x > M / 2) x -= M;
        out[n] = x;
    }
    return out;
}

std::vector<BigInt> power_traces_exact(const TransferMatrix& t, int nmax) {
    const int d = t.dim();
    auto T = t.big();
    std::vector<std::vector<BigInt>> P(d, std::vector<BigInt>(d, 0));
    for (int i = 0; i < d; ++i) P[i][i] = 1;
    std::vector<BigInt> out;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::vector<BigInt>> Q(d, std::vector<BigInt>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (P[i][k] == 0) continue;
                for (int j = 0; j < d; ++j)
                    if (T[k][j] != 0) Q[i][j] += P[i][k] * T[k][j];
            }
        P.swap(Q);
        BigInt tr = 0;
        for (int i = 0; i < d; ++i) tr += P[i][i];
        out.push_back(tr);
    }
    return out;
}

BigInt z_cylinder(int m, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return power_traces(build_transfer_square(m), n).back();
}

BigInt z_rect(int m, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n == 0 || m == 0) return 1;
    auto t = build_transfer_square(m);
    const int d = t.dim();
    std::vector<BigInt> v(d);
    for (int j = 0; j < d; ++j) v[j] = (face_size(t.states[j]) % 2) ? -1 : 1;
    for (int step = 1; step < n; ++step) {
        std::vector<BigInt> w(d, 0);
        for (int i = 0; i < d; ++i)
            if (v[i] != 0)
                for (int j = 0; j < d; ++j)
                    if (t.a[i][j]) w[j] += v[i] * t.a[i][j];
        v.swap(w);
    }
    BigInt s = 0;
    for (auto& x : v) s += x;
    return s;
}

BigInt z_hex_cylinder(int m, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return power_traces(build_transfer_hex(m, HexVariant::Cylinder), n).back();
}

BigInt z_hex_torus(int m, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return power_traces(build_transfer_hex(m, HexVariant::Torus), n).back();
}

namespace {

template <class R>
R bareiss(std::vector<std::vector<R>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return R(1);
    R prev(1);
    bool neg = false;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(a[k][k])) {
            int s = k + 1;
            while (s < n && is_zero(a[s][k])) ++s;
            if (s == n) return R(0);
            std::swap(a[k], a[s]);
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                R num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = exact_div(num, prev);
            }
        prev = a[k][k];
    }
    R d = a[n - 1][n - 1];
    return neg ? R(0) - d : d;
}

template <class R>
Poly<R> char_poly_impl(const std::vector<std::vector<R>>& a) {
    const int d = static_cast<int>(a.size());
    for (auto& r : a)
        if (static_cast<int>(r.size()) != d) throw std::invalid_argument("matrix is not square");
    // values det(kI - A) at k = 0..d
    std::vector<R> val(d + 1);
    auto eval_at = [&](int k) {
        auto m = a;
        for (auto& r : m)
            for (auto& x : r) x = R(0) - x;
        for (int i = 0; i < d; ++i) m[i][i] = m[i][i] + R(k);
        return bareiss(std::move(m));
    };
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || d < 8) {
        for (int k = 0; k <= d; ++k) val[k] = eval_at(k);
    } else {
        std::vector<std::future<void>> fs;
        for (unsigned w = 0; w < workers; ++w)
            fs.push_back(std::async(std::launch::async, [&, w] {
                for (int k = static_cast<int>(w); k <= d; k += static_cast<int>(workers)) val[k] = eval_at(k);
            }));
        for (auto& f : fs) f.get();
    }
    // forward differences; Delta^j f(0) / j! are the falling-factorial coefficients
    std::vector<R> diff = val, b(d + 1);
    BigInt fact = 1;
    for (int j = 0; j <= d; ++j) {
        if (j > 0) fact *= j;
        b[j] = exact_div(diff[0], R(fact));
        for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    // sum b_j t(t-1)...(t-j+1)
    Poly<R> result, falling = Poly<R>::constant(R(1));
    for (int j = 0; j <= d; ++j) {
        result += Poly<R>::constant(b[j]) * falling;
        falling = falling * Poly<R>(std::vector<R>{R(-j), R(1)});
    }
    return result;
}

}  // namespace

BigInt determinant(std::vector<std::vector<BigInt>> a) { return bareiss(std::move(a)); }
GaussInt determinant(std::vector<std::vector<GaussInt>> a) { return bareiss(std::move(a)); }

IntPoly char_poly(const std::vector<std::vector<BigInt>>& a) { return char_poly_impl(a); }
GaussPoly char_poly(const std::vector<std::vector<GaussInt>>& a) { return char_poly_impl(a); }
IntPoly char_poly(const TransferMatrix& t) { return char_poly_impl(t.big()); }

std::string CyclotomicReport::str() const {
    std::ostringstream os;
    os << (is_product ? "cyclotomic" : "not cyclotomic");
    if (stripped_power) os << "; t^" << stripped_power;
    os << "; factors";
    for (auto [n, e] : factors) os << " Phi_" << n << (e > 1 ? "^" + std::to_string(e) : "");
    if (is_product) os << "; N = " << period;
    else os << "; remainder " << remainder.str();
    return os.str();
}

CyclotomicReport cyclotomic_test(const IntPoly& p, long long bound) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    CyclotomicReport rep;
    rep.stripped_power = p.valuation();
    IntPoly r = p.strip();
    if (bound <= 0) bound = 2LL * r.degree() * r.degree();
    bound = std::max(bound, 2LL);
    // Euler phi by sieve; only n with phi(n) <= deg can divide
    std::vector<long long> phi(bound + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (long long i = 2; i <= bound; ++i)
        if (phi[i] == i)
            for (long long j = i; j <= bound; j += i) phi[j] -= phi[j] / i;
    for (long long n = 1; n <= bound && r.degree() > 0; ++n) {
        if (phi[n] > r.degree()) continue;
        IntPoly c = cyclotomic(static_cast<int>(n));
        int e = 0;
        while (r.degree() >= c.degree()) {
            auto [q, rem] = r.divmod(c, [](const BigInt& x, const BigInt& y) {
                if (x % y != 0) throw std::domain_error("inexact");
                return BigInt(x / y);
            });
            if (!rem.is_zero()) break;
            r = q;
            ++e;
        }
        if (e) {
            rep.factors.push_back({static_cast<int>(n), e});
            rep.period = boost::multiprecision::lcm(rep.period, BigInt(n));
        }
    }
    rep.remainder = r;
    rep.is_product = r.degree() == 0 && (r[0] == 1 || r[0] == -1);
    return rep;
}

bool same_up_to_orientation(const IntPoly& p, const IntPoly& q, std::string* how) {
    IntPoly a = p.strip(), b = q.strip();
    auto eq = [](const IntPoly& x, const IntPoly& y) { return x == y || x == -y; };
    if (eq(a, b)) {
        if (how) *how = "direct";
        return true;
    }
    if (eq(a.reciprocal(), b)) {
        if (how) *how = "reciprocal";
        return true;
    }
    return false;
}

}  // namespace indcx
