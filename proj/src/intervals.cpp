#include "indcx/intervals.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "indcx/complex.hpp"
#include "indcx/transfer.hpp"

namespace indcx {

std::vector<int> IntervalDecomposition::sizes() const {
    std::vector<int> s;
    for (auto& iv : intervals) s.push_back(static_cast<int>(iv.size()));
    return s;
}

std::vector<int> canonical_rotation(std::vector<int> s) {
    std::vector<int> best = s;
    for (std::size_t r = 1; r < s.size(); ++r) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        if (s < best) best = s;
    }
    return best;
}

std::vector<int> IntervalDecomposition::signature() const { return canonical_rotation(sizes()); }

bool IntervalDecomposition::all_even() const {
    return !intervals.empty() &&
           std::all_of(intervals.begin(), intervals.end(), [](auto& iv) { return iv.size() % 2 == 0; });
}

bool IntervalDecomposition::all_odd() const {
    return !intervals.empty() &&
           std::all_of(intervals.begin(), intervals.end(), [](auto& iv) { return iv.size() % 2 == 1; });
}

std::vector<int> IntervalDecomposition::even_positions() const {
    std::vector<int> out;
    for (auto& iv : intervals)
        for (std::size_t p = 1; p < iv.size(); p += 2) out.push_back(iv[p]);
    return out;
}

std::string label_name(ClassLabel c) {
    switch (c) {
        case ClassLabel::P1: return "P1";
        case ClassLabel::P2: return "P2";
        case ClassLabel::Q1: return "Q1";
        case ClassLabel::Q2: return "Q2";
        case ClassLabel::Q3: return "Q3";
    }
    return "?";
}

CylinderIntervals::CylinderIntervals(int m, int n) : m_(m), n_(n), g_(build_square_cyl(m, n)) {
    if (g_.vertex_count() > 64) throw BudgetExceeded("face masks hold at most 64 vertices");
    nb_ = g_.masks();
}

IntervalDecomposition CylinderIntervals::decompose(Face s) const {
    IntervalDecomposition d;
    d.n = n_;
    for (int c = 1; c <= n_; ++c)
        if (has(s, top(c))) d.pi.push_back(c);
    const int k = static_cast<int>(d.pi.size());
    for (int i = 0; i < k; ++i) {
        int prev = d.pi[(i - 1 + k) % k], cur = d.pi[i];
        int len = ((cur - prev) % n_ + n_) % n_;
        if (len == 0) len = n_;
        std::vector<int> iv;
        for (int p = 1; p <= len; ++p) iv.push_back((prev - 1 + p) % n_ + 1);
        (len % 2 ? d.pi_odd : d.pi_even).push_back(cur);
        d.intervals.push_back(std::move(iv));
    }
    return d;
}

bool CylinderIntervals::is_free(Face s, int v) const {
    return g_.usable(v) && !has(s, v) && (s & nb_[v]) == 0;
}

Face CylinderIntervals::closure(Face s) const {
    Face add = 0;
    for (int c : decompose(s).even_positions())
        if (is_free(s, top(c))) add |= bit(top(c));
    return s | add;
}

std::size_t CylinderIntervals::class_size(Face s) const {
    auto d = decompose(closure(s));
    if (d.pi.empty()) return 1;
    if (d.all_even()) return (std::size_t{1} << d.pi.size()) - 1;
    return std::size_t{1} << d.pi_even.size();
}

std::vector<Face> CylinderIntervals::equivalence_class(Face s) const {
    Face h = closure(s);
    auto d = decompose(h);
    if (d.pi.empty()) return {s};
    bool p2 = d.all_even();
    const std::vector<int>& removable = p2 ? d.pi : d.pi_even;
    const std::size_t r = removable.size();
    std::vector<Face> out;
    for (std::size_t S = 0; S < (std::size_t{1} << r); ++S) {
        if (p2 && S + 1 == (std::size_t{1} << r)) continue;  // proper subsets only
        Face f = h;
        for (std::size_t i = 0; i < r; ++i)
            if ((S >> i) & 1) f &= ~bit(top(removable[i]));
        out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassLabel CylinderIntervals::classify(Face s) const {
    auto d = decompose(s);
    if (d.pi.empty()) return ClassLabel::Q3;
    if (d.all_even()) return ClassLabel::P2;
    if (class_size(s) > 1) return ClassLabel::P1;
    auto sz = d.sizes();
    if (std::all_of(sz.begin(), sz.end(), [](int x) { return x == 3; })) return ClassLabel::Q1;
    if (d.all_odd()) return ClassLabel::Q2;
    throw std::logic_error("singleton class with mixed interval parities");
}

namespace {

// tall thin cylinders outgrow the transfer matrix; the frontier sum has no cap
BigInt zc(int m, int n) {
    if (m == 0) return 1;
    try {
        return z_cylinder(m, n);
    } catch (const BudgetExceeded&) {
        return alternating_sum(build_square_cyl(m, n));
    }
}

BigInt neg_one_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

BigInt p2_closed_form(int m, int n) {
    if (n % 2) return 0;  // no face has only even intervals
    BigInt r = -2 * zc(m - 1, n);
    if (m % 2 == 0) r += 2 * neg_one_pow(static_cast<long long>(m) * n / 4);
    return r;
}

BigInt q1_closed_form(int m, int n) {
    if (n % 3) return 0;
    switch (m % 3) {
        case 0: return 0;
        case 1: return 3 * neg_one_pow(n / 3);
        default: return 3;
    }
}

std::string ClassSums::json() const {
    nlohmann::json j{{"m", m},
                     {"n", n},
                     {"total", total},
                     {"sums", {{"P1", p1}, {"P2", p2}, {"Q1", q1}, {"Q2", q2}, {"Q3", q3}}},
                     {"counts", {{"P1", c_p1}, {"P2", c_p2}, {"Q1", c_q1}, {"Q2", c_q2}, {"Q3", c_q3}}},
                     {"expected", {{"Z", z.str()}, {"P2", p2_expected.str()}, {"Q1", q1_expected.str()}, {"Q3", q3_expected.str()}}},
                     {"classes_match", classes_match},
                     {"q2_transfer_checked", q2_transfer_checked},
                     {"failures", failures}};
    return j.dump();
}

ClassSums class_sums(int m, int n, std::size_t max_faces) {
    CylinderIntervals ci(m, n);
    std::vector<Face> faces;
    enumerate_independent_sets(ci.graph(), [&](Face f) {
        if (faces.size() >= max_faces) throw BudgetExceeded("class_sums face budget exceeded");
        faces.push_back(f);
    });
    std::vector<Face> closures(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) closures[i] = ci.closure(faces[i]);
    std::vector<Face> sorted = closures;
    std::sort(sorted.begin(), sorted.end());

    ClassSums r;
    r.m = m;
    r.n = n;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        Face s = faces[i];
        auto range = std::equal_range(sorted.begin(), sorted.end(), closures[i]);
        std::size_t grouped = static_cast<std::size_t>(range.second - range.first);
        if (grouped != ci.class_size(s)) r.classes_match = false;
        long long sign = face_size(s) % 2 ? -1 : 1;
        r.total += sign;
        switch (ci.classify(s)) {
            case ClassLabel::P1: r.p1 += sign, ++r.c_p1; break;
            case ClassLabel::P2: r.p2 += sign, ++r.c_p2; break;
            case ClassLabel::Q1: r.q1 += sign, ++r.c_q1; break;
            case ClassLabel::Q2: r.q2 += sign, ++r.c_q2; break;
            case ClassLabel::Q3: r.q3 += sign, ++r.c_q3; break;
        }
    }
    r.z = zc(m, n);
    r.p2_expected = p2_closed_form(m, n);
    r.q1_expected = q1_closed_form(m, n);
    r.q3_expected = zc(m - 1, n);
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) r.failures.push_back(what);
    };
    check(r.classes_match, "closure classes differ from the closed form");
    check(r.p1 == 0, "P1 total is " + std::to_string(r.p1));
    check(BigInt(r.p2) == r.p2_expected, "P2 total " + std::to_string(r.p2) + " vs " + r.p2_expected.str());
    check(BigInt(r.q1) == r.q1_expected, "Q1 total " + std::to_string(r.q1) + " vs " + r.q1_expected.str());
    check(BigInt(r.q3) == r.q3_expected, "Q3 total " + std::to_string(r.q3) + " vs " + r.q3_expected.str());
    check(BigInt(r.total) == r.z, "total " + std::to_string(r.total) + " vs transfer " + r.z.str());
    check(r.p1 + r.p2 + r.q1 + r.q2 + r.q3 == r.total, "class totals do not reassemble");
    try {
        BigInt q2t = q2_sum(m, n);
        r.q2_transfer_checked = true;
        check(BigInt(r.q2) == q2t, "Q2 total " + std::to_string(r.q2) + " vs transfer " + q2t.str());
    } catch (const BudgetExceeded&) {
    }
    return r;
}

namespace {

enum class TopMode { OddIntervals, Threes, NoParticle };

/**
 * Column state (c, pos): c an independent set of the column (bit 0 is the
 * top row) and pos the position of this column inside its top-row
 * interval. For odd intervals only the parity matters (0 odd, 1 even);
 * for intervals of length exactly 3 pos runs 0, 1, 2. A particle must sit
 * on an odd position that closes the interval; an even position whose
 * row-2 cell is empty must be followed by the particle, or it would be free.
 */
TransferMatrix top_row_transfer(int m, TopMode mode) {
    auto sq = build_transfer_square(m);
    const int period = mode == TopMode::Threes ? 3 : 2;
    struct St {
        Face c;
        int pos;
    };
    std::vector<St> st;
    for (Face c : sq.states)
        for (int pos = 0; pos < period; ++pos) {
            bool top = has(c, 0);
            if (mode == TopMode::NoParticle && top) continue;
            if (mode == TopMode::Threes ? (top != (pos == 2)) : (top && pos == 1)) continue;
            st.push_back({c, pos});
        }
    TransferMatrix t;
    t.label = "top-row intervals m=" + std::to_string(m);
    for (auto& s : st) t.states.push_back(s.c | (Face(s.pos) << 62));
    const std::size_t d = st.size();
    t.a.assign(d, std::vector<long long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        const St& a = st[i];
        bool top = has(a.c, 0);
        bool row2 = m >= 2 && has(a.c, 1);
        int next;
        if (mode == TopMode::Threes) next = (a.pos + 1) % 3;
        else next = top ? 0 : 1 - a.pos;
        bool need_particle = mode != TopMode::Threes && a.pos == 1 && !row2;
        for (std::size_t j = 0; j < d; ++j) {
            const St& b = st[j];
            if (b.pos != next || (a.c & b.c)) continue;
            if (need_particle && !has(b.c, 0)) continue;
            t.a[i][j] = face_size(b.c) % 2 ? -1 : 1;
        }
    }
    return t;
}

BigInt top_trace(int m, int n, TopMode mode) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return power_traces(top_row_transfer(m, mode), n).back();
}

}  // namespace

// A self-wrapped column (n = 1) has only the empty face, which lies in Q3.
BigInt q1_sum(int m, int n) { return n == 1 ? BigInt(0) : top_trace(m, n, TopMode::Threes); }

BigInt q2_sum(int m, int n) {
    if (n == 1) return 0;
    // odd intervals with non-free even positions, minus the empty top row
    // (counted once per phase) and the all-3 signatures
    return top_trace(m, n, TopMode::OddIntervals) - top_trace(m, n, TopMode::NoParticle) -
           top_trace(m, n, TopMode::Threes);
}

namespace {

// Constant part of the P2 closed form.
BigInt p2_constant(int m, int n) {
    if (n % 2 || m % 2) return 0;
    return 2 * neg_one_pow(static_cast<long long>(m) * n / 4);
}

}  // namespace

BigInt unrolled_residual(int m, int n) {
    BigInt explained = neg_one_pow(m);
    for (int k = 1; k <= m; ++k)
        explained += neg_one_pow(m - k) * (p2_constant(k, n) + q1_closed_form(k, n));
    return z_cylinder(m, n) - explained;
}

std::vector<ResidualCell> residual_table(int max_n, int max_m, std::size_t enum_budget) {
    std::vector<ResidualCell> out;
    if (max_n < 2) return out;
    std::vector<BigInt> prev_alt(max_n + 1, 0);
    for (int m = 1; m <= max_m; ++m) {
        // one pass of traces per mode covers every n
        auto odd = power_traces(top_row_transfer(m, TopMode::OddIntervals), max_n);
        auto none = power_traces(top_row_transfer(m, TopMode::NoParticle), max_n);
        auto threes = power_traces(top_row_transfer(m, TopMode::Threes), max_n);
        auto zm = power_traces(build_transfer_square(m), max_n);
        for (int n = 2; n <= max_n; n += 2) {
            ResidualCell c;
            c.m = m;
            c.n = n;
            c.q2 = odd[n - 1] - none[n - 1] - threes[n - 1];
            BigInt explained = neg_one_pow(m);
            for (int k = 1; k <= m; ++k)
                explained += neg_one_pow(m - k) * (p2_constant(k, n) + q1_closed_form(k, n));
            c.residual = zm[n - 1] - explained;
            // R(m) = Q2(m) - R(m-1)
            c.residual_from_q2 = c.q2 - prev_alt[n];
            prev_alt[n] = c.residual_from_q2;
            if (enum_budget > 0 && m * n <= 64) {
                try {
                    c.q2_enumerated = class_sums(m, n, enum_budget).q2;
                } catch (const BudgetExceeded&) {
                }
            }
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.n != b.n ? a.n < b.n : a.m < b.m; });
    return out;
}

namespace {

// Columns at even positions other than x_i - 1: each needs its row-2 cell
// occupied for the top row to have no free even position.
std::vector<int> forced_row2(int n, const std::vector<int>& pi) {
    std::vector<int> f;
    const int k = static_cast<int>(pi.size());
    for (int i = 0; i < k; ++i) {
        int prev = pi[(i - 1 + k) % k];
        int len = ((pi[i] - prev) % n + n) % n;
        if (len == 0) len = n;
        for (int p = 2; p < len - 1; p += 2) f.push_back((prev - 1 + p) % n + 1);
    }
    return f;
}

}  // namespace

BigInt pattern_sum_all(int m, int n, const std::vector<int>& pi) {
    BigInt sign = neg_one_pow(static_cast<long long>(pi.size()));
    if (m == 1) return sign;
    Graph g = build_square_cyl(m - 1, n);
    for (int c : pi) g.set_blocked(g.id(1, c));
    return sign * alternating_sum(g);
}

BigInt pattern_sum(int m, int n, const std::vector<int>& pi) {
    if (m == 1) return 0;
    Graph g = build_square_cyl(m - 1, n);
    for (int c : pi) g.set_blocked(g.id(1, c));
    auto f = forced_row2(n, pi);
    for (int p : f) {
        int v = g.id(1, p);
        if (!g.usable(v)) return 0;
        for (int w : std::vector<int>(g.neighbors(v))) g.remove_vertex(w);
        g.remove_vertex(v);
    }
    return neg_one_pow(static_cast<long long>(pi.size() + f.size())) * alternating_sum(g);
}

std::vector<PatternSum> conjecture5_scan(int m, int n) {
    std::vector<PatternSum> out;
    if (m < 2 || n < 5) return out;  // Q2 needs a row-2 cell and an interval of length >= 5
    std::vector<int> cur;
    auto emit = [&]() {
        PatternSum ps;
        ps.pi = cur;
        ps.sum = pattern_sum(m, n, cur);
        ps.all_sum = pattern_sum_all(m, n, cur);
        out.push_back(std::move(ps));
    };
    // increasing columns, odd gaps >= 3, at least one gap >= 5, wrap included
    auto rec = [&](auto&& self, bool long_gap) -> void {
        int last = cur.back();
        int wrap = n - last + cur.front();
        if (wrap >= 3 && wrap % 2 == 1 && (long_gap || wrap >= 5)) emit();
        for (int gap = 3; last + gap <= n; gap += 2) {
            if (n - (last + gap) + cur.front() < 3) break;
            cur.push_back(last + gap);
            self(self, long_gap || gap >= 5);
            cur.pop_back();
        }
    };
    for (int c1 = 1; c1 <= n; ++c1) {
        cur = {c1};
        rec(rec, false);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.pi < b.pi; });
    return out;
}

std::vector<BigInt> z_c6_sequence(int max_m) {
    std::vector<BigInt> out;
    for (int m = 1; m <= max_m; ++m) out.push_back(z_cylinder(m, 6));
    return out;
}

}  // namespace indcx
