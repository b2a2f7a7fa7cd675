#include "indcx/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace indcx {

void IntegerMatrix::normalize() {
    for (auto& t : entries)
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::out_of_range("matrix entry outside dimensions");
    std::sort(entries.begin(), entries.end(),
              [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    std::vector<Triplet> out;
    out.reserve(entries.size());
    for (auto& t : entries) {
        if (!out.empty() && out.back().row == t.row && out.back().col == t.col) out.back().value += t.value;
        else out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Triplet& t) { return t.value == 0; });
    entries.swap(out);
}

std::vector<std::vector<BigInt>> IntegerMatrix::dense() const {
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols, 0));
    for (auto& t : entries) a[t.row][t.col] += t.value;
    return a;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<BigInt>>& a) {
    IntegerMatrix m;
    m.rows = static_cast<int>(a.size());
    m.cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (a[i][j] != 0) m.entries.push_back({i, j, a[i][j]});
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch");
    std::vector<std::vector<std::pair<int, BigInt>>> brow(b.rows);
    for (auto& t : b.entries) brow[t.row].push_back({t.col, t.value});
    IntegerMatrix c;
    c.rows = a.rows;
    c.cols = b.cols;
    for (auto& t : a.entries)
        for (auto& [j, v] : brow[t.col]) c.entries.push_back({t.row, j, t.value * v});
    c.normalize();
    return c;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < -1 || k > std::max(c.dim(), -1)) throw std::out_of_range("boundary dimension out of range");
    IntegerMatrix m;
    const auto& top = c.faces(k);
    m.cols = static_cast<int>(top.size());
    if (k == -1) {
        m.rows = 0;
        return m;
    }
    const auto& low = c.faces(k - 1);
    m.rows = static_cast<int>(low.size());
    for (int j = 0; j < m.cols; ++j) {
        int i = 0;
        for_each_bit(top[j], [&](int v) {
            Face f = top[j] & ~bit(v);
            auto it = std::lower_bound(low.begin(), low.end(), f);
            if (it == low.end() || *it != f) throw std::logic_error("complex is not downward closed");
            m.entries.push_back({static_cast<int>(it - low.begin()), j, BigInt(i % 2 == 0 ? 1 : -1)});
            ++i;
        });
    }
    return m;
}

namespace {

struct Overflow {};

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <class T>
T from_big(const BigInt& v);
template <>
long long from_big<long long>(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<long long>::max()) || v < BigInt(std::numeric_limits<long long>::min()))
        throw Overflow{};
    return static_cast<long long>(v);
}
template <>
BigInt from_big<BigInt>(const BigInt& v) {
    return v;
}

struct Reduced {
    long long unit_rank = 0;
    std::vector<std::vector<BigInt>> residual;
};

// Sparse elimination on unit pivots; the rest is handed back dense.
template <class T>
Reduced eliminate_units(const IntegerMatrix& m) {
    using Row = std::vector<std::pair<int, T>>;
    std::vector<Row> rows(m.rows);
    std::vector<std::vector<int>> colrows(m.cols);
    {
        IntegerMatrix n = m;
        n.normalize();
        for (auto& t : n.entries) rows[t.row].push_back({t.col, from_big<T>(t.value)});
        for (int r = 0; r < m.rows; ++r) {
            std::sort(rows[r].begin(), rows[r].end(), [](auto& a, auto& b) { return a.first < b.first; });
            for (auto& [c, v] : rows[r]) colrows[c].push_back(r);
        }
    }
    std::vector<char> rowdead(m.rows, 0), coldead(m.cols, 0);
    auto find = [&](int r, int c) -> const T* {
        auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](auto& e, int x) { return e.first < x; });
        if (it == row.end() || it->first != c) return nullptr;
        return &it->second;
    };

    // live entry count per column; a lazy heap always offers the sparsest
    // column next, so free faces go first and cost no fill-in
    std::vector<int> count(m.cols, 0);
    for (int c = 0; c < m.cols; ++c) count[c] = static_cast<int>(colrows[c].size());
    // bucket queue keyed by count, entries checked lazily on the way out
    std::vector<std::vector<int>> bucket(1);
    std::size_t low = 0;
    auto push = [&](int c) {
        std::size_t k = static_cast<std::size_t>(count[c]);
        if (k >= bucket.size()) bucket.resize(k + 1);
        bucket[k].push_back(c);
        low = std::min(low, k);
    };
    for (int c = 0; c < m.cols; ++c)
        if (count[c] > 0) push(c);
    auto bump = [&](int c, int d) {
        count[c] += d;
        if (count[c] > 0 && !coldead[c]) push(c);
    };
    auto next_column = [&]() -> int {
        while (low < bucket.size()) {
            auto& b = bucket[low];
            while (!b.empty()) {
                int c = b.back();
                b.pop_back();
                if (!coldead[c] && static_cast<std::size_t>(count[c]) == low) return c;
            }
            ++low;
        }
        return -1;
    };

    Reduced out;
    Row merged;
    std::vector<unsigned> seen(m.rows, 0);
    unsigned stamp = 0;
    std::vector<int> alive;
    for (int c; (c = next_column()) >= 0;) {
        auto& cl = colrows[c];
        alive.clear();
        ++stamp;
        int pivot = -1;
        for (int r : cl) {
            if (rowdead[r] || seen[r] == stamp) continue;
            const T* v = find(r, c);
            if (!v) continue;
            seen[r] = stamp;
            alive.push_back(r);
            if (is_unit(*v) && (pivot < 0 || rows[r].size() < rows[pivot].size())) pivot = r;
        }
        cl = alive;
        if (pivot < 0) continue;  // revisited only if the column changes
        const T pv = *find(pivot, c);
        const Row prow = rows[pivot];
        for (int r : alive) {
            if (r == pivot) continue;
            const T f = checked_mul(*find(r, c), pv);  // pv = +-1, so this is v_r / pv
            auto& row = rows[r];
            merged.clear();
            size_t i = 0, j = 0;
            while (i < row.size() || j < prow.size()) {
                if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
                    merged.push_back(row[i++]);
                } else if (i == row.size() || prow[j].first < row[i].first) {
                    T nv = checked_sub(T(0), checked_mul(f, prow[j].second));
                    int col = prow[j].first;
                    merged.push_back({col, nv});
                    colrows[col].push_back(r);
                    if (col != c) bump(col, +1);
                    ++j;
                } else {
                    T nv = checked_sub(row[i].second, checked_mul(f, prow[j].second));
                    if (nv != 0) merged.push_back({row[i].first, nv});
                    else if (row[i].first != c) bump(row[i].first, -1);
                    ++i;
                    ++j;
                }
            }
            row.swap(merged);
        }
        rowdead[pivot] = 1;
        coldead[c] = 1;
        for (auto& [col, v] : prow)
            if (col != c) bump(col, -1);
        cl.clear();
        cl.shrink_to_fit();
        ++out.unit_rank;
    }

    std::vector<int> rmap(m.rows, -1), cmap(m.cols, -1);
    int nr = 0, nc = 0;
    for (int r = 0; r < m.rows; ++r) {
        if (rowdead[r] || rows[r].empty()) continue;
        rmap[r] = nr++;
        for (auto& [c, v] : rows[r])
            if (cmap[c] < 0) cmap[c] = nc++;
    }
    out.residual.assign(nr, std::vector<BigInt>(nc, 0));
    for (int r = 0; r < m.rows; ++r)
        if (rmap[r] >= 0)
            for (auto& [c, v] : rows[r]) out.residual[rmap[r]][cmap[c]] = BigInt(v);
    return out;
}

// Transposed so that rows are boundaries of single faces: short, with
// little fill-in. Invariant factors do not change.
Reduced reduce(const IntegerMatrix& a) {
    IntegerMatrix m;
    m.rows = a.cols;
    m.cols = a.rows;
    m.entries.reserve(a.entries.size());
    for (auto& t : a.entries) m.entries.push_back({t.col, t.row, t.value});
    try {
        return eliminate_units<long long>(m);
    } catch (const Overflow&) {
        return eliminate_units<BigInt>(m);
    }
}

// floor division
BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
    const int R = static_cast<int>(a.size());
    const int C = R ? static_cast<int>(a[0].size()) : 0;
    std::vector<BigInt> diag;
    for (int t = 0; t < std::min(R, C); ++t) {
        auto pick = [&]() {
            int bi = -1, bj = -1;
            BigInt best = 0;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j)
                    if (a[i][j] != 0 && (bi < 0 || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        bi = i;
                        bj = j;
                    }
            return std::pair{bi, bj};
        };
        auto [pi, pj] = pick();
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][pj]);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = fdiv(a[i][t], a[t][t]);
                for (int j = t; j < C; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = fdiv(a[t][j], a[t][t]);
                for (int i = t; i < R; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                // bring the smallest remainder of row/column t to the pivot
                int bi = t, bj = t;
                BigInt best = abs(a[t][t]);
                for (int i = t + 1; i < R; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < best) best = abs(a[i][t]), bi = i, bj = t;
                for (int j = t + 1; j < C; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < best) best = abs(a[t][j]), bi = t, bj = j;
                std::swap(a[t], a[bi]);
                for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][bj]);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < R && bad < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < C; ++j) a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

// Units divide everything, so only the few larger factors need the pairwise pass.
void normalize_chain(std::vector<BigInt>& all) {
    std::vector<BigInt> d;
    std::size_t ones = 0;
    for (auto& x : all) {
        if (x == 1) ++ones;
        else d.push_back(x);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                BigInt g = gcd(d[i], d[j]);
                BigInt l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
    }
    std::erase_if(d, [](const BigInt& x) { return x == 1; });
    std::sort(d.begin(), d.end());
    ones += all.size() - ones - d.size();
    all.assign(ones, BigInt(1));
    all.insert(all.end(), d.begin(), d.end());
}

}  // namespace

std::vector<BigInt> smith_normal_form(const IntegerMatrix& m) {
    Reduced r = reduce(m);
    std::vector<BigInt> d(r.unit_rank, BigInt(1));
    auto rest = dense_snf(std::move(r.residual));
    d.insert(d.end(), rest.begin(), rest.end());
    normalize_chain(d);
    return d;
}

long long matrix_rank(const IntegerMatrix& m) { return static_cast<long long>(smith_normal_form(m).size()); }

long long HomologyProfile::betti(int i) const {
    for (auto& d : dims)
        if (d.dim == i) return d.betti;
    return 0;
}

std::vector<BigInt> HomologyProfile::torsion(int i) const {
    for (auto& d : dims)
        if (d.dim == i) return d.torsion;
    return {};
}

bool HomologyProfile::has_torsion() const {
    for (auto& d : dims)
        if (!d.torsion.empty()) return true;
    return false;
}

bool HomologyProfile::is_trivial() const {
    for (auto& d : dims)
        if (d.betti != 0 || !d.torsion.empty()) return false;
    return true;
}

long long HomologyProfile::euler() const {
    long long e = 0;
    for (auto& d : dims) e += ((d.dim % 2 == 0) ? 1 : -1) * d.betti;
    return e;
}

std::string HomologyProfile::table_entry() const {
    std::ostringstream os;
    bool first = true;
    for (auto& d : dims) {
        if (d.betti != 0) {
            os << (first ? "" : ", ") << "(" << d.dim << "," << d.betti << ")";
            first = false;
        }
        if (!d.torsion.empty()) {
            os << (first ? "" : ", ") << "T" << d.dim << ":[";
            for (size_t i = 0; i < d.torsion.size(); ++i) os << (i ? "," : "") << d.torsion[i];
            os << "]";
            first = false;
        }
    }
    return first ? "0" : os.str();
}

std::string HomologyProfile::json() const {
    nlohmann::json j;
    auto arr = nlohmann::json::array();
    for (auto& d : dims) {
        std::vector<std::string> t;
        for (auto& x : d.torsion) t.push_back(x.str());
        arr.push_back({{"i", d.dim}, {"betti", d.betti}, {"torsion", t}});
    }
    j["dims"] = arr;
    return j.dump();
}

bool HomologyProfile::operator==(const HomologyProfile& o) const {
    int lo = -1, hi = -1;
    for (auto& d : dims) hi = std::max(hi, d.dim);
    for (auto& d : o.dims) hi = std::max(hi, d.dim);
    for (int i = lo; i <= hi; ++i)
        if (betti(i) != o.betti(i) || torsion(i) != o.torsion(i)) return false;
    return true;
}

HomologyProfile HomologyProfile::shifted(int s) const {
    HomologyProfile p;
    for (auto d : dims) {
        d.dim += s;
        p.dims.push_back(d);
    }
    return p;
}

HomologyProfile homology_profile(const SimplicialComplex& c) {
    HomologyProfile p;
    const int top = c.dim();
    if (top < -1) return p;  // void complex: nothing at all
    // rank and torsion of d_k for k = 0..top
    std::vector<long long> rank(top + 2, 0);
    std::vector<std::vector<BigInt>> tors(top + 2);
    for (int k = 0; k <= top; ++k) {
        auto f = smith_normal_form(boundary_matrix(c, k));
        rank[k] = static_cast<long long>(f.size());
        for (auto& x : f)
            if (x > 1) tors[k].push_back(x);
    }
    for (int i = -1; i <= top; ++i) {
        DimHomology d;
        d.dim = i;
        long long n = static_cast<long long>(c.faces(i).size());
        long long rk = (i >= 0) ? rank[i] : 0;
        long long rk1 = (i + 1 <= top) ? rank[i + 1] : 0;
        d.betti = n - rk - rk1;
        if (i + 1 <= top) d.torsion = tors[i + 1];
        p.dims.push_back(d);
    }
    return p;
}

}  // namespace indcx
