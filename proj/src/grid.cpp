#include "indcx/grid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace indcx {

namespace {

void check_size(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
}

const std::pair<Family, const char*> kNames[] = {
    {Family::SquareRect, "square_rect"}, {Family::SquareCyl, "square_cyl"},
    {Family::SquareTorus, "square_torus"}, {Family::HexRect, "hex_rect"},
    {Family::HexCyl, "hex_cyl"},         {Family::HexTorus, "hex_torus"},
    {Family::Parallelogram, "parallelogram"}, {Family::Custom, "custom"},
};

}  // namespace

std::string family_name(Family f) {
    for (auto& [fam, name] : kNames)
        if (fam == f) return name;
    return "custom";
}

Family family_from_name(const std::string& s) {
    for (auto& [fam, name] : kNames)
        if (s == name) return fam;
    if (s == "C" || s == "cyl") return Family::SquareCyl;
    if (s == "S" || s == "rect") return Family::SquareRect;
    if (s == "T" || s == "torus") return Family::SquareTorus;
    if (s == "CH") return Family::HexCyl;
    if (s == "TH" || s == "CT") return Family::HexTorus;
    if (s == "P") return Family::Parallelogram;
    throw std::invalid_argument("unknown family: " + s);
}

Graph::Graph(Family family, int m, int n, int rows, int cols)
    : family_(family), m_(m), n_(n), rows_(rows), cols_(cols),
      adj_(static_cast<size_t>(rows) * cols),
      removed_(static_cast<size_t>(rows) * cols, 0),
      blocked_(static_cast<size_t>(rows) * cols, 0) {}

int Graph::id(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) throw std::out_of_range("vertex outside grid");
    return (row - 1) * cols_ + (col - 1);
}

std::pair<int, int> Graph::coords(int v) const { return {v / cols_ + 1, v % cols_ + 1}; }

int Graph::live_count() const {
    return static_cast<int>(std::count(removed_.begin(), removed_.end(), 0));
}

int Graph::edge_count() const {
    size_t s = 0;
    for (auto& a : adj_) s += a.size();
    return static_cast<int>(s / 2);
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::live_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (live(v)) out.push_back(v);
    return out;
}

std::vector<Face> Graph::masks() const {
    if (vertex_count() > 64) throw BudgetExceeded("graph has more than 64 vertex ids");
    std::vector<Face> out(vertex_count(), 0);
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : adj_[v]) out[v] |= bit(w);
    return out;
}

Face Graph::usable_mask() const {
    if (vertex_count() > 64) throw BudgetExceeded("graph has more than 64 vertex ids");
    Face f = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (usable(v)) f |= bit(v);
    return f;
}

bool Graph::is_independent(Face f) const {
    bool ok = true;
    for_each_bit(f, [&](int v) {
        if (v >= vertex_count() || !usable(v)) ok = false;
        else
            for (int w : adj_[v])
                if (has(f, w)) ok = false;
    });
    return ok;
}

void Graph::add_edge(int u, int v) {
    if (u == v) {
        blocked_[u] = 1;
        return;
    }
    if (removed_[u] || removed_[v]) throw std::logic_error("edge endpoint removed");
    auto ins = [](std::vector<int>& a, int x) {
        auto it = std::lower_bound(a.begin(), a.end(), x);
        if (it == a.end() || *it != x) a.insert(it, x);
    };
    ins(adj_[u], v);
    ins(adj_[v], u);
}

void Graph::set_blocked(int v, bool b) { blocked_[v] = b ? 1 : 0; }

void Graph::remove_vertex(int v) {
    if (removed_[v]) throw std::invalid_argument("vertex already removed");
    for (int w : adj_[v]) {
        auto& a = adj_[w];
        a.erase(std::lower_bound(a.begin(), a.end(), v));
    }
    adj_[v].clear();
    removed_[v] = 1;
    blocked_[v] = 0;
}

Graph build_square_rect(int m, int n) {
    check_size(m, n);
    Graph g(Family::SquareRect, m, n, m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j < n) g.add_edge(g.id(i, j), g.id(i, j + 1));
            if (i < m) g.add_edge(g.id(i, j), g.id(i + 1, j));
        }
    return g;
}

Graph build_square_cyl(int m, int n) {
    check_size(m, n);
    Graph g = build_square_rect(m, n);
    Graph c(Family::SquareCyl, m, n, m, n);
    for (auto [u, v] : g.edges()) c.add_edge(u, v);
    // n = 1: wrap is a self-loop (blocked); n = 2: wrap duplicates an edge.
    for (int i = 1; i <= m; ++i) c.add_edge(c.id(i, 1), c.id(i, n));
    return c;
}

Graph build_square_torus(int m, int n) {
    check_size(m, n);
    Graph c = build_square_cyl(m, n);
    Graph t(Family::SquareTorus, m, n, m, n);
    for (auto [u, v] : c.edges()) t.add_edge(u, v);
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.blocked(v)) t.set_blocked(v);
    for (int j = 1; j <= n; ++j) t.add_edge(t.id(1, j), t.id(m, j));
    return t;
}

Graph build_hex_rect(int m, int n) {
    check_size(m, n);
    Graph g(Family::HexRect, m, n, m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j < n) g.add_edge(g.id(i, j), g.id(i, j + 1));
            if (i < m && (i + j) % 2 == 0) g.add_edge(g.id(i, j), g.id(i + 1, j));
        }
    return g;
}

Graph build_hex_cyl(int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
    const int R = m + 1, C = 2 * n;
    Graph g(Family::HexCyl, m, n, R, C);
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) {
            g.add_edge(r * C + c, r * C + (c + 1) % C);
            if (r + 1 < R && (r + c) % 2 == 0) g.add_edge(r * C + c, (r + 1) * C + c);
        }
    return g;
}

Graph build_hex_torus(int m, int n) {
    check_size(m, n);
    const int R = m, C = 2 * n;
    Graph g(Family::HexTorus, m, n, R, C);
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) {
            g.add_edge(r * C + c, r * C + (c + 1) % C);
            if (r + 1 < R && (r + c) % 2 == 0) g.add_edge(r * C + c, (r + 1) * C + c);
        }
    // wrap rungs carry a shear of m columns
    for (int c = 0; c < C; ++c) {
        if ((m - 1 + c) % 2 != 0) continue;
        int u = (m - 1) * C + c;
        int v = ((c - m) % C + C) % C;
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

Graph build_parallelogram(int m, int n) {
    check_size(m, n);
    Graph g(Family::Parallelogram, m, n, m, n);
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= n; ++k) {
            if (k < n) g.add_edge(g.id(j, k), g.id(j, k + 1));
            if (j < m && k < n) g.add_edge(g.id(j + 1, k), g.id(j, k + 1));
        }
    return g;
}

Graph build_family(Family f, int m, int n) {
    switch (f) {
        case Family::SquareRect: return build_square_rect(m, n);
        case Family::SquareCyl: return build_square_cyl(m, n);
        case Family::SquareTorus: return build_square_torus(m, n);
        case Family::HexRect: return build_hex_rect(m, n);
        case Family::HexCyl: return build_hex_cyl(m, n);
        case Family::HexTorus: return build_hex_torus(m, n);
        case Family::Parallelogram: return build_parallelogram(m, n);
        default: throw std::invalid_argument("no builder for family");
    }
}

BoundaryFixed fix_boundary_mask(const Graph& g, unsigned A, unsigned B) {
    if (g.family() != Family::Parallelogram) throw std::invalid_argument("fix_boundary needs a parallelogram");
    const int m = g.m(), n = g.n();
    const unsigned full = (m >= 32) ? ~0u : ((1u << m) - 1);
    if ((A & ~full) || (B & ~full)) throw std::invalid_argument("boundary row outside [m]");
    if (n < 2 && (A || B)) throw std::invalid_argument("boundaries coincide for n < 2");

    BoundaryFixed out;
    out.forced_count = std::popcount(A) + std::popcount(B);
    std::vector<int> forced;
    std::vector<char> empty(g.vertex_count(), 0);
    for (int j = 1; j <= m; ++j) {
        int l = g.id(j, 1), r = g.id(j, n);
        if (A >> (j - 1) & 1u) forced.push_back(l);
        else empty[l] = 1;
        if (B >> (j - 1) & 1u) forced.push_back(r);
        else empty[r] = 1;
    }
    for (size_t a = 0; a < forced.size(); ++a)
        for (size_t b = a + 1; b < forced.size(); ++b)
            if (forced[a] == forced[b] || g.has_edge(forced[a], forced[b])) out.feasible = false;
    for (int v : forced) empty[v] = 0;

    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : forced) {
        gone[v] = 1;
        for (int w : g.neighbors(v)) gone[w] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (empty[v]) gone[v] = 1;
    out.graph = g;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (gone[v] && out.graph.live(v)) out.graph.remove_vertex(v);
    return out;
}

BoundaryFixed fix_boundary(const Graph& g, const std::vector<int>& A, const std::vector<int>& B) {
    auto pack = [&](const std::vector<int>& s) {
        unsigned x = 0;
        for (int j : s) {
            if (j < 1 || j > g.m() || j > 31) throw std::invalid_argument("boundary row outside [m]");
            x |= 1u << (j - 1);
        }
        return x;
    };
    return fix_boundary_mask(g, pack(A), pack(B));
}

Graph induced_delete(const Graph& g, const std::vector<int>& S) {
    Graph h = g;
    for (int v : S) {
        if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("vertex id out of range");
        if (!h.live(v)) throw std::invalid_argument("vertex already removed");
        h.remove_vertex(v);
    }
    return h;
}

std::vector<std::pair<int, int>> wrapped_rect_edges(int m, int n) {
    auto es = build_square_rect(m, n).edges();
    std::set<std::pair<int, int>> e(es.begin(), es.end());
    for (int i = 0; i < m; ++i) {
        int u = i * n, v = i * n + n - 1;
        if (u != v) e.insert({std::min(u, v), std::max(u, v)});
    }
    return {e.begin(), e.end()};
}

int torus_translation_orbits(const Graph& g) {
    const int R = g.rows(), C = g.cols(), N = g.vertex_count();
    std::vector<int> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int dr = 0; dr < R; ++dr)
        for (int dc = 0; dc < C; ++dc) {
            auto f = [&](int v) { return ((v / C + dr) % R) * C + (v % C + dc) % C; };
            bool aut = true;
            for (auto [u, v] : g.edges())
                if (!g.has_edge(f(u), f(v))) aut = false;
            for (int v = 0; v < N && aut; ++v)
                if (g.live(v) != g.live(f(v)) || g.blocked(v) != g.blocked(f(v))) aut = false;
            if (!aut) continue;
            for (int v = 0; v < N; ++v) parent[find(v)] = find(f(v));
        }
    int orbits = 0;
    for (int v = 0; v < N; ++v)
        if (g.live(v) && find(v) == v) ++orbits;
    return orbits;
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["family"] = family_name(g.family());
    j["m"] = g.m();
    j["n"] = g.n();
    j["rows"] = g.rows();
    j["cols"] = g.cols();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    std::vector<int> removed, blocked;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.live(v)) removed.push_back(v);
        else if (g.blocked(v)) blocked.push_back(v);
    }
    j["removed"] = removed;
    j["blocked"] = blocked;
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int m = j.at("m"), n = j.at("n");
    int rows = j.value("rows", m), cols = j.value("cols", n);
    Graph g(family_from_name(j.at("family").get<std::string>()), m, n, rows, cols);
    for (auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    for (auto& v : j.value("blocked", std::vector<int>{})) g.set_blocked(v);
    for (auto& v : j.value("removed", std::vector<int>{})) g.remove_vertex(v);
    return g;
}

}  // namespace indcx
