#include "indcx/morse.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace indcx {

int MatchingTree::add_leaf() {
    nodes_.push_back({Kind::Leaf, -1, {}});
    return static_cast<int>(nodes_.size()) - 1;
}

int MatchingTree::add_match(int pivot, int child) {
    nodes_.push_back({Kind::Match, pivot, {child}});
    return static_cast<int>(nodes_.size()) - 1;
}

int MatchingTree::add_split(int pivot, int left, int right) {
    nodes_.push_back({Kind::Split, pivot, {left, right}});
    return static_cast<int>(nodes_.size()) - 1;
}

namespace {

const char* kind_name(MatchingTree::Kind k) {
    switch (k) {
        case MatchingTree::Kind::Split: return "split";
        case MatchingTree::Kind::Match: return "match";
        default: return "leaf";
    }
}

nlohmann::json node_json(const MatchingTree& t, int i) {
    const auto& n = t.node(i);
    nlohmann::json j{{"kind", kind_name(n.kind)}};
    if (n.kind != MatchingTree::Kind::Leaf) j["pivot"] = n.pivot;
    auto ch = nlohmann::json::array();
    for (int c : n.children) ch.push_back(node_json(t, c));
    j["children"] = ch;
    return j;
}

int node_from_json(MatchingTree& t, const nlohmann::json& j) {
    std::string k = j.at("kind").get<std::string>();
    const auto& ch = j.contains("children") ? j.at("children") : nlohmann::json::array();
    if (k == "leaf") {
        if (!ch.empty()) throw std::invalid_argument("leaf with children");
        return t.add_leaf();
    }
    int p = j.at("pivot").get<int>();
    if (k == "match") {
        if (ch.size() != 1) throw std::invalid_argument("match node needs one child");
        return t.add_match(p, node_from_json(t, ch[0]));
    }
    if (k == "split") {
        if (ch.size() != 2) throw std::invalid_argument("split node needs two children");
        int l = node_from_json(t, ch[0]);
        int r = node_from_json(t, ch[1]);
        return t.add_split(p, l, r);
    }
    throw std::invalid_argument("unknown node kind: " + k);
}

}  // namespace

std::string MatchingTree::to_json() const {
    if (root_ < 0) return "null";
    return node_json(*this, root_).dump();
}

MatchingTree MatchingTree::from_json(const std::string& text) {
    MatchingTree t;
    t.set_root(node_from_json(t, nlohmann::json::parse(text)));
    return t;
}

TreeCheck validate_tree(const Graph& g, const MatchingTree& t) {
    TreeCheck out;
    if (t.empty()) {
        out.ok = false;
        out.message = "empty tree";
        return out;
    }
    std::vector<int> path;
    std::vector<int> matched;
    std::function<bool(int)> walk = [&](int i) {
        const auto& n = t.node(i);
        if (n.kind == MatchingTree::Kind::Leaf) return true;
        int p = n.pivot;
        if (p < 0 || p >= g.vertex_count() || !g.live(p)) {
            out.ok = false;
            out.message = "pivot " + std::to_string(p) + " is not a live vertex";
            out.path = path;
            out.path.push_back(p);
            return false;
        }
        if (std::find(path.begin(), path.end(), p) != path.end()) {
            out.ok = false;
            out.message = "pivot " + std::to_string(p) + " repeated on a path";
            out.path = path;
            out.path.push_back(p);
            return false;
        }
        if (n.kind == MatchingTree::Kind::Match) {
            for (int q : matched)
                if (g.has_edge(p, q)) {
                    out.ok = false;
                    out.message = "match pivots " + std::to_string(q) + " and " + std::to_string(p) + " are adjacent";
                    out.path = path;
                    out.path.push_back(p);
                    return false;
                }
        }
        path.push_back(p);
        if (n.kind == MatchingTree::Kind::Match) matched.push_back(p);
        bool ok = true;
        for (int c : n.children)
            if (!(ok = walk(c))) break;
        if (n.kind == MatchingTree::Kind::Match) matched.pop_back();
        path.pop_back();
        return ok;
    };
    walk(t.root());
    return out;
}

TreeEvaluation evaluate_tree(const Graph& g, const MatchingTree& t, std::size_t max_faces) {
    auto check = validate_tree(g, t);
    if (!check.ok) throw std::invalid_argument("invalid matching tree: " + check.message);
    const auto nb = g.masks();
    std::vector<Face> all;
    enumerate_independent_sets(g, [&](Face f) {
        if (all.size() >= max_faces) throw BudgetExceeded("face budget exceeded in evaluate_tree");
        all.push_back(f);
    });
    std::sort(all.begin(), all.end());
    TreeEvaluation ev;
    ev.face_count = all.size();
    std::size_t accounted = 0;

    auto free_in = [&](int p, Face s) { return !has(s, p) && g.usable(p) && (s & nb[p]) == 0; };

    std::function<void(int, std::vector<Face>&&)> rec = [&](int i, std::vector<Face>&& content) {
        const auto& n = t.node(i);
        if (n.kind == MatchingTree::Kind::Leaf) {
            accounted += content.size();
            ev.critical.insert(ev.critical.end(), content.begin(), content.end());
            return;
        }
        const int p = n.pivot;
        if (n.kind == MatchingTree::Kind::Split) {
            std::vector<Face> left, right;
            for (Face s : content) (has(s, p) ? right : left).push_back(s);
            content.clear();
            content.shrink_to_fit();
            rec(n.children[0], std::move(left));
            rec(n.children[1], std::move(right));
            return;
        }
        // splits and filters keep contents sorted
        auto in = [&](Face f) { return std::binary_search(content.begin(), content.end(), f); };
        std::vector<Face> rest;
        for (Face s : content) {
            if (has(s, p)) {
                if (!in(s & ~bit(p))) throw std::logic_error("hake lemma fails: sigma - p missing at pivot " + std::to_string(p));
                ev.matching.pairs.push_back({s, s & ~bit(p)});
                accounted += 2;
            } else if (free_in(p, s)) {
                if (!in(s | bit(p))) throw std::logic_error("hake lemma fails: sigma + p missing at pivot " + std::to_string(p));
            } else {
                rest.push_back(s);
            }
        }
        content.clear();
        rec(n.children[0], std::move(rest));
    };
    rec(t.root(), std::move(all));
    if (accounted != ev.face_count) throw std::logic_error("faces not partitioned by the matching tree");
    std::sort(ev.critical.begin(), ev.critical.end());
    return ev;
}

FaceMatching mo_matching(const Graph& g, Face O) {
    if (!g.is_independent(O)) throw std::invalid_argument("O is not an independent set");
    const auto nb = g.masks();
    const auto os = face_vertices(O);
    FaceMatching m;
    enumerate_independent_sets(g, [&](Face s) {
        for (int o : os) {
            if (has(s, o)) {
                m.pairs.push_back({s, s & ~bit(o)});
                return;
            }
            if ((s & nb[o]) == 0) return;  // o free: s is the lower face of a pair
        }
    });
    return m;
}

std::vector<Face> unmatched_faces(const SimplicialComplex& c, const FaceMatching& m) {
    std::vector<Face> used;
    used.reserve(2 * m.pairs.size());
    for (auto& [a, b] : m.pairs) {
        used.push_back(a);
        used.push_back(b);
    }
    std::sort(used.begin(), used.end());
    std::vector<Face> out;
    for (Face f : c.all_faces())
        if (!std::binary_search(used.begin(), used.end(), f)) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Faces addressed as (size, index into c.faces(size-1)).
struct Levels {
    const SimplicialComplex& c;
    std::vector<std::vector<int>> up, down;  // partner index or -1

    explicit Levels(const SimplicialComplex& cx) : c(cx) {
        int top = std::max(c.dim(), -1) + 1;
        up.resize(top + 2);
        down.resize(top + 2);
        for (int s = 0; s <= top; ++s) {
            up[s].assign(faces(s).size(), -1);
            down[s].assign(faces(s).size(), -1);
        }
    }
    int top() const { return static_cast<int>(up.size()) - 2; }
    const std::vector<Face>& faces(int s) const {
        static const std::vector<Face> none;
        return (s - 1 <= c.dim()) ? c.faces(s - 1) : none;
    }
    int index(Face f) const {
        int s = face_size(f);
        if (s > top()) return -1;
        const auto& L = faces(s);
        auto it = std::lower_bound(L.begin(), L.end(), f);
        return (it != L.end() && *it == f) ? static_cast<int>(it - L.begin()) : -1;
    }
};

bool load_pairs(Levels& lv, const FaceMatching& m, AcyclicReport& rep) {
    for (auto& [a, b] : m.pairs) {
        int ia = lv.index(a), ib = lv.index(b);
        if ((a & b) != b || face_size(a ^ b) != 1 || ia < 0 || ib < 0) {
            rep.ok = rep.is_matching = false;
            rep.message = "pair is not a cover relation of the complex";
            rep.cycle = {a, b};
            return false;
        }
        int sa = face_size(a), sb = face_size(b);
        if (lv.up[sa][ia] >= 0 || lv.down[sa][ia] >= 0 || lv.up[sb][ib] >= 0 || lv.down[sb][ib] >= 0) {
            rep.ok = rep.is_matching = false;
            rep.message = "face matched twice";
            rep.cycle = {a, b};
            return false;
        }
        lv.down[sa][ia] = ib;
        lv.up[sb][ib] = ia;
    }
    return true;
}

// Depth-first search of the Hasse digraph with matched edges reversed,
// restricted to face sizes lo..hi and started from `starts`.
bool find_cycle(const Levels& lv, int lo, int hi, const std::vector<std::pair<int, int>>& starts,
                std::vector<Face>& witness) {
    std::vector<std::vector<char>> state(lv.up.size());
    for (int s = lo; s <= hi; ++s) state[s].assign(lv.faces(s).size(), 0);
    struct Frame {
        int s, i;
        int next;  // -1: partner edge still to try; then facet positions
    };
    auto face_of = [&](int s, int i) { return lv.faces(s)[i]; };
    for (auto [s0, i0] : starts) {
        if (state[s0][i0]) continue;
        std::vector<Frame> st{{s0, i0, -1}};
        state[s0][i0] = 1;
        while (!st.empty()) {
            auto& fr = st.back();
            int ns = -1, ni = -1;
            if (fr.next == -1) {
                fr.next = 0;
                if (fr.s + 1 <= hi && lv.up[fr.s][fr.i] >= 0) ns = fr.s + 1, ni = lv.up[fr.s][fr.i];
            } else {
                if (fr.s - 1 >= lo) {
                    Face f = face_of(fr.s, fr.i);
                    auto vs = face_vertices(f);
                    while (fr.next < static_cast<int>(vs.size()) && ns < 0) {
                        int h = lv.index(f & ~bit(vs[fr.next++]));
                        if (h >= 0 && lv.down[fr.s][fr.i] != h) ns = fr.s - 1, ni = h;
                    }
                }
                if (ns < 0) {
                    state[fr.s][fr.i] = 2;
                    st.pop_back();
                    continue;
                }
            }
            if (ns < 0) continue;
            char& sn = state[ns][ni];
            if (sn == 1) {
                auto at = std::find_if(st.begin(), st.end(), [&](const Frame& x) { return x.s == ns && x.i == ni; });
                for (; at != st.end(); ++at) witness.push_back(face_of(at->s, at->i));
                return true;
            }
            if (sn == 0) {
                sn = 1;
                st.push_back({ns, ni, -1});
            }
        }
    }
    return false;
}

}  // namespace

AcyclicReport check_acyclic(const SimplicialComplex& c, const FaceMatching& m) {
    AcyclicReport rep;
    Levels lv(c);
    if (!load_pairs(lv, m, rep)) return rep;
    // a directed cycle stays between two adjacent sizes
    for (int s = 0; s < lv.top(); ++s) {
        std::vector<std::pair<int, int>> starts;
        for (int i = 0; i < static_cast<int>(lv.up[s].size()); ++i)
            if (lv.up[s][i] >= 0) starts.push_back({s, i});
        if (starts.empty()) continue;
        std::vector<Face> w;
        if (find_cycle(lv, s, s + 1, starts, w)) {
            rep.ok = false;
            rep.message = "directed cycle between dimensions " + std::to_string(s - 1) + " and " + std::to_string(s);
            rep.cycle = w;
            return rep;
        }
    }
    return rep;
}

AcyclicReport check_acyclic_global(const SimplicialComplex& c, const FaceMatching& m) {
    AcyclicReport rep;
    Levels lv(c);
    if (!load_pairs(lv, m, rep)) return rep;
    std::vector<std::pair<int, int>> starts;
    for (int s = 0; s <= lv.top(); ++s)
        for (int i = 0; i < static_cast<int>(lv.faces(s).size()); ++i) starts.push_back({s, i});
    std::vector<Face> w;
    if (find_cycle(lv, 0, lv.top(), starts, w)) {
        rep.ok = false;
        rep.message = "directed cycle in the modified Hasse diagram";
        rep.cycle = w;
    }
    return rep;
}

MorseReport morse_consistency(const SimplicialComplex& c, const FaceMatching& m) {
    MorseReport r;
    auto crit = unmatched_faces(c, m);
    r.critical_by_dim.assign(std::max(c.dim(), -1) + 2, 0);
    for (Face f : crit) r.critical_by_dim[face_size(f)]++;
    for (std::size_t i = 0; i < r.critical_by_dim.size(); ++i)
        r.critical_euler += (i % 2 == 1 ? 1 : -1) * r.critical_by_dim[i];  // index i is dimension i-1
    r.homology = homology_profile(c);
    for (std::size_t i = 0; i < r.critical_by_dim.size(); ++i) {
        long long b = r.homology.betti(static_cast<int>(i) - 1);
        if (b > r.critical_by_dim[i]) r.inequalities_hold = false;
    }
    r.euler_holds = r.critical_euler == r.homology.euler() && r.critical_euler == c.reduced_euler();
    if (!r.inequalities_hold) throw std::logic_error("weak Morse inequality violated");
    int nonzero = 0, at = -2;
    for (std::size_t i = 0; i < r.critical_by_dim.size(); ++i)
        if (r.critical_by_dim[i]) ++nonzero, at = static_cast<int>(i) - 1;
    std::ostringstream os;
    if (nonzero == 0) {
        os << "contractible (perfect matching)";
    } else if (nonzero == 1) {
        long long u = r.critical_by_dim[at + 1];
        if (u == 1) os << "S^" << at;
        else os << "wedge of " << u << " S^" << at;
    } else {
        os << "critical cells in " << nonzero << " dimensions";
    }
    r.conclusion = os.str();
    return r;
}

TreeFamily tree_family_from_name(const std::string& s) {
    if (s == "C2" || s == "sqcyl2") return TreeFamily::SquareCyl2;
    if (s == "C3" || s == "sqcyl3") return TreeFamily::SquareCyl3;
    if (s == "C4" || s == "sqcyl4") return TreeFamily::SquareCyl4;
    if (s == "C5" || s == "sqcyl5") return TreeFamily::SquareCyl5;
    if (s == "H2" || s == "hexcyl2") return TreeFamily::HexCyl2;
    throw std::invalid_argument("unsupported tree family: " + s);
}

std::string tree_family_name(TreeFamily f) {
    switch (f) {
        case TreeFamily::SquareCyl2: return "C2";
        case TreeFamily::SquareCyl3: return "C3";
        case TreeFamily::SquareCyl4: return "C4";
        case TreeFamily::SquareCyl5: return "C5";
        default: return "H2";
    }
}

namespace {

// Symbolic content: faces sigma with F <= sigma <= F + R, independent, and
// meeting every clause.
struct State {
    Face F = 0;
    Face R = 0;
    std::vector<Face> clauses;
    Face forb = 0;  // match pivots so far and their neighbours
    int decisions = 0;
};

struct Move {
    bool match = false;
    int pivot = -1;
};

using Policy = std::function<Move(const State&)>;

class Engine {
public:
    Engine(const Graph& g, Policy pol) : g_(g), nb_(g.masks()), pol_(std::move(pol)) {}

    int build(State s) {
        // propagate clauses and apply the degree 0/1 match closure; each
        // closure match becomes a node above whatever follows
        std::vector<int> pending;
        bool empty = false;
        for (bool changed = true; changed && !empty;) {
            changed = false;
            std::vector<Face> kept;
            for (Face c : s.clauses) {
                if (c & s.F) continue;
                c &= s.R;
                if (c == 0) {
                    empty = true;
                    break;
                }
                if (face_size(c) == 1) {
                    int q = std::countr_zero(c);
                    s.F |= bit(q);
                    s.R &= ~(bit(q) | nb_[q]);
                    changed = true;
                } else {
                    kept.push_back(c);
                }
            }
            if (empty) break;
            s.clauses = kept;
            if (changed) continue;
            Face cand = s.R & ~s.forb;
            int deg0 = -1, deg1 = -1;
            for_each_bit(cand, [&](int p) {
                int d = face_size(nb_[p] & s.R);
                if (d == 0 && deg0 < 0) deg0 = p;
                if (d == 1 && deg1 < 0) deg1 = p;
            });
            if (deg0 >= 0) {
                pending.push_back(deg0);
                empty = true;
                break;
            }
            if (deg1 >= 0) {
                pending.push_back(deg1);
                s.clauses.push_back(nb_[deg1] & s.R);
                s.R &= ~bit(deg1);
                s.forb |= nb_[deg1] | bit(deg1);
                changed = true;
            }
        }
        int node;
        if (empty) {
            node = tree_.add_leaf();
        } else if (s.R == 0) {
            node = tree_.add_leaf();
            if (s.clauses.empty()) critical_.push_back(s.F);
        } else {
            Move mv = pol_(s);
            if (mv.pivot < 0 || !has(s.R, mv.pivot)) throw std::logic_error("policy chose a dead pivot");
            State a = s;
            a.decisions++;
            if (mv.match) {
                if (has(s.forb, mv.pivot)) throw std::logic_error("policy chose a forbidden match pivot");
                a.clauses.push_back(nb_[mv.pivot] & s.R);
                a.R &= ~bit(mv.pivot);
                a.forb |= nb_[mv.pivot] | bit(mv.pivot);
                node = tree_.add_match(mv.pivot, build(std::move(a)));
            } else {
                State b = a;
                a.R &= ~bit(mv.pivot);
                b.F |= bit(mv.pivot);
                b.R &= ~(bit(mv.pivot) | nb_[mv.pivot]);
                int l = build(std::move(a));
                int r = build(std::move(b));
                node = tree_.add_split(mv.pivot, l, r);
            }
        }
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) node = tree_.add_match(*it, node);
        return node;
    }

    GeneratedTree run() {
        State s;
        s.R = g_.usable_mask();
        tree_.set_root(build(s));
        std::sort(critical_.begin(), critical_.end());
        return {g_, tree_, critical_};
    }

private:
    const Graph& g_;
    std::vector<Face> nb_;
    Policy pol_;
    MatchingTree tree_;
    std::vector<Face> critical_;
};

int lowest(Face f) { return std::countr_zero(f); }

Face candidates(const State& s) { return s.clauses.empty() ? s.R : (s.clauses.front() & s.R); }

Move lowest_first(const State& s) { return {false, lowest(candidates(s))}; }

// Top live row of a square cylinder with n columns, and its live columns.
int top_row(const State& s, int n) { return lowest(s.R) / n; }

std::vector<int> live_cols(const State& s, int row, int n, int m) {
    std::vector<int> out;
    if (row >= m) return out;
    for (int j = 0; j < n; ++j)
        if (has(s.R, row * n + j)) out.push_back(j);
    return out;
}

int missing_col(const std::vector<int>& cols, int n) {
    for (int j = 0; j < n; ++j)
        if (std::find(cols.begin(), cols.end(), j) == cols.end()) return j;
    return -1;
}

}  // namespace

GeneratedTree tree_generator(TreeFamily f, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    switch (f) {
        case TreeFamily::SquareCyl2: {
            Graph g = build_square_cyl(m, 2);
            return Engine(g, lowest_first).run();
        }
        case TreeFamily::HexCyl2: {
            Graph g = build_hex_cyl(m, 2);
            return Engine(g, lowest_first).run();
        }
        case TreeFamily::SquareCyl3: {
            const int n = 3;
            Graph g = build_square_cyl(m, n);
            auto pol = [m](const State& s) -> Move {
                if (s.decisions == 0) return {false, 0};
                int top = top_row(s, n);
                auto row = live_cols(s, top, n, m);
                auto next = live_cols(s, top + 1, n, m);
                if (static_cast<int>(row.size()) == n - 1 && static_cast<int>(next.size()) == n) {
                    int j0 = missing_col(row, n);
                    int v = (top + 2) * n + j0;
                    if (top + 2 < m && has(s.R, v)) return {false, v};
                    int x = (top + 1) * n + j0;
                    if (!has(s.forb, x)) return {true, x};
                }
                return lowest_first(s);
            };
            return Engine(g, pol).run();
        }
        case TreeFamily::SquareCyl4: {
            const int n = 4;
            Graph g = build_square_cyl(m, n);
            auto pol = [m](const State& s) -> Move {
                if (s.decisions == 0) return {false, 0};
                int top = top_row(s, n);
                auto row = live_cols(s, top, n, m);
                if (static_cast<int>(row.size()) == n - 1) {
                    int v = top * n + (missing_col(row, n) + 2) % n;
                    if (has(s.R, v)) return {false, v};
                }
                return lowest_first(s);
            };
            return Engine(g, pol).run();
        }
        case TreeFamily::SquareCyl5: {
            const int n = 5;
            Graph g = build_square_cyl(m, n);
            auto nb = g.masks();
            auto pol = [nb](const State& s) -> Move {
                if (s.decisions == 0) return {false, 0};
                if (s.decisions == 1 && has(s.R, 2)) return {false, 2};
                // highest degree in the remaining graph, lowest id on ties
                int best = -1, bd = -1;
                for_each_bit(candidates(s), [&](int p) {
                    int d = face_size(nb[p] & s.R);
                    if (d > bd) bd = d, best = p;
                });
                return {false, best};
            };
            return Engine(g, pol).run();
        }
    }
    throw std::invalid_argument("unsupported tree family");
}

GeneratedTree example_tree_s32() {
    GeneratedTree out;
    out.graph = build_square_rect(3, 2);
    auto& g = out.graph;
    auto& t = out.tree;
    int l = t.add_match(g.id(1, 2), t.add_match(g.id(3, 1), t.add_leaf()));
    int r = t.add_match(g.id(2, 2), t.add_leaf());
    t.set_root(t.add_split(g.id(1, 1), l, r));
    out.predicted_critical = {bit(g.id(1, 1)) | bit(g.id(3, 2))};
    return out;
}

}  // namespace indcx
