#include "indcx/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace indcx {

void enumerate_independent_sets(const Graph& g, const std::function<void(Face)>& visit) {
    const auto nb = g.masks();
    std::vector<int> order;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.usable(v)) order.push_back(v);
    const int L = static_cast<int>(order.size());
    // explicit stack: (position, face, forbidden)
    struct Frame { int pos; Face face; Face forb; };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        int p = f.pos;
        while (p < L && has(f.forb, order[p])) ++p;
        if (p == L) {
            visit(f.face);
            continue;
        }
        int v = order[p];
        stack.push_back({p + 1, f.face | bit(v), f.forb | nb[v] | bit(v)});
        stack.push_back({p + 1, f.face, f.forb});
    }
}

std::size_t count_independent_sets(const Graph& g) {
    std::size_t c = 0;
    enumerate_independent_sets(g, [&](Face) { ++c; });
    return c;
}

long long alternating_sum_enumerated(const Graph& g) {
    long long z = 0;
    enumerate_independent_sets(g, [&](Face f) { z += (face_size(f) & 1) ? -1 : 1; });
    return z;
}

namespace {

struct Plan {
    std::vector<int> order;
    std::vector<int> slot;           // frontier slot per vertex, -1 if it never waits
    std::vector<std::uint64_t> prev; // per step: slot mask of earlier neighbours
    std::vector<std::uint64_t> retire;
    int width = 0;
};

Plan make_plan(const Graph& g, const std::vector<int>& order) {
    const int N = g.vertex_count();
    Plan p;
    p.order = order;
    std::vector<int> pos(N, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    std::vector<int> last(N, -1);
    for (int v : order) {
        last[v] = pos[v];
        for (int w : g.neighbors(v)) last[v] = std::max(last[v], pos[w]);
    }
    p.slot.assign(N, -1);
    p.prev.assign(order.size(), 0);
    p.retire.assign(order.size(), 0);
    std::vector<int> free_slots;
    int next = 0, live = 0;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        int v = order[i];
        for (int w : g.neighbors(v))
            if (pos[w] < i) p.prev[i] |= std::uint64_t{1} << p.slot[w];
        if (last[v] > i) {
            int s;
            if (!free_slots.empty()) {
                s = free_slots.back();
                free_slots.pop_back();
            } else {
                s = next++;
            }
            if (s >= 64) throw BudgetExceeded("frontier wider than 64 vertices");
            p.slot[v] = s;
            ++live;
        }
        for (int w : g.neighbors(v))
            if (pos[w] < i && last[w] == i) {
                p.retire[i] |= std::uint64_t{1} << p.slot[w];
                free_slots.push_back(p.slot[w]);
                --live;
            }
        p.width = std::max(p.width, live);
    }
    return p;
}

std::vector<int> column_major(const Graph& g) {
    std::vector<int> out;
    for (int c = 1; c <= g.cols(); ++c)
        for (int r = 1; r <= g.rows(); ++r) {
            int v = g.id(r, c);
            if (g.live(v)) out.push_back(v);
        }
    return out;
}

}  // namespace

BigInt partition_function(const Graph& g, long z) {
    Plan best;
    bool have = false;
    for (auto ord : {g.live_vertices(), column_major(g)}) {
        try {
            Plan p = make_plan(g, ord);
            if (!have || p.width < best.width) {
                best = std::move(p);
                have = true;
            }
        } catch (const BudgetExceeded&) {
        }
    }
    if (!have) throw BudgetExceeded("no vertex order with frontier of at most 64 vertices");

    std::unordered_map<std::uint64_t, BigInt> cur{{0, BigInt(1)}}, nxt;
    for (size_t i = 0; i < best.order.size(); ++i) {
        const int v = best.order[i];
        const std::uint64_t prev = best.prev[i], ret = best.retire[i];
        const std::uint64_t own = best.slot[v] >= 0 ? (std::uint64_t{1} << best.slot[v]) : 0;
        const bool usable = !g.blocked(v);
        nxt.clear();
        nxt.reserve(cur.size() * 2);
        for (auto& [s, val] : cur) {
            nxt[s & ~ret] += val;
            if (usable && !(s & prev)) nxt[(s | own) & ~ret] += val * z;
        }
        std::swap(cur, nxt);
        for (auto it = cur.begin(); it != cur.end();) {
            if (it->second == 0) it = cur.erase(it);
            else ++it;
        }
    }
    BigInt total = 0;
    for (auto& [s, val] : cur) total += val;
    return total;
}

BigInt alternating_sum(const Graph& g) { return partition_function(g, -1); }

std::size_t SimplicialComplex::face_count() const {
    std::size_t s = 0;
    for (auto& v : by_size_) s += v.size();
    return s;
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
    static const std::vector<Face> none;
    if (k + 1 < 0 || k + 1 >= static_cast<int>(by_size_.size())) return none;
    return by_size_[k + 1];
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::vector<Face> out;
    for (auto& v : by_size_) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (size_t k = 0; k < by_size_.size(); ++k)
        for (Face f : by_size_[k]) {
            bool maximal = true;
            if (k + 1 < by_size_.size())
                for (int v = 0; v < ground_ && maximal; ++v)
                    if (!has(f, v) && std::binary_search(by_size_[k + 1].begin(), by_size_[k + 1].end(), f | bit(v)))
                        maximal = false;
            if (maximal) out.push_back(f);
        }
    return out;
}

bool SimplicialComplex::contains(Face f) const {
    size_t k = face_size(f);
    if (k >= by_size_.size()) return false;
    return std::binary_search(by_size_[k].begin(), by_size_[k].end(), f);
}

long long SimplicialComplex::reduced_euler() const {
    long long chi = 0;
    for (size_t k = 0; k < by_size_.size(); ++k)
        chi += (k % 2 == 1 ? 1 : -1) * static_cast<long long>(by_size_[k].size());
    return chi;
}

void SimplicialComplex::add(Face f) {
    size_t k = face_size(f);
    if (by_size_.size() <= k) by_size_.resize(k + 1);
    by_size_[k].push_back(f);
}

void SimplicialComplex::finalize() {
    for (auto& v : by_size_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    while (!by_size_.empty() && by_size_.back().empty()) by_size_.pop_back();
}

SimplicialComplex SimplicialComplex::from_faces(int ground, const std::vector<Face>& faces) {
    SimplicialComplex c(ground);
    for (Face f : faces) c.add(f);
    c.finalize();
    return c;
}

SimplicialComplex SimplicialComplex::downward_closure(int ground, const std::vector<Face>& generators) {
    std::unordered_set<Face> seen;
    std::vector<Face> work;
    for (Face f : generators)
        if (seen.insert(f).second) work.push_back(f);
    while (!work.empty()) {
        Face f = work.back();
        work.pop_back();
        for_each_bit(f, [&](int v) {
            Face s = f & ~bit(v);
            if (seen.insert(s).second) work.push_back(s);
        });
    }
    return from_faces(ground, {seen.begin(), seen.end()});
}

bool SimplicialComplex::is_downward_closed() const {
    for (auto& v : by_size_)
        for (Face f : v) {
            bool ok = true;
            for_each_bit(f, [&](int x) { ok = ok && contains(f & ~bit(x)); });
            if (!ok) return false;
        }
    return true;
}

SimplicialComplex independence_complex(const Graph& g, std::size_t max_faces) {
    SimplicialComplex c(g.vertex_count());
    std::size_t n = 0;
    enumerate_independent_sets(g, [&](Face f) {
        if (++n > max_faces) throw BudgetExceeded("independence complex exceeds face budget");
        c.add(f);
    });
    c.finalize();
    return c;
}

SimplicialComplex cone(const SimplicialComplex& c) {
    if (c.ground_size() + 1 > 64) throw BudgetExceeded("cone needs more than 64 vertices");
    const Face apex = bit(c.ground_size());
    SimplicialComplex out(c.ground_size() + 1);
    for (Face f : c.all_faces()) {
        out.add(f);
        out.add(f | apex);
    }
    out.finalize();
    return out;
}

SimplicialComplex susp(const SimplicialComplex& c) {
    if (c.ground_size() + 2 > 64) throw BudgetExceeded("suspension needs more than 64 vertices");
    const Face s0 = bit(c.ground_size()), s1 = bit(c.ground_size() + 1);
    SimplicialComplex out(c.ground_size() + 2);
    for (Face f : c.all_faces()) {
        out.add(f);
        out.add(f | s0);
        out.add(f | s1);
    }
    out.finalize();
    return out;
}

ODecomposition gamma_delta_O(const Graph& g, Face O) {
    if (!g.is_independent(O)) throw std::invalid_argument("O is not an independent set");
    const auto nb = g.masks();
    ODecomposition d;
    enumerate_independent_sets(g, [&](Face s) {
        bool hit = true;
        for_each_bit(O, [&](int u) { hit = hit && (s & nb[u]) != 0; });
        if (hit) d.X.push_back(s);
    });
    std::sort(d.X.begin(), d.X.end());
    d.delta = SimplicialComplex::downward_closure(g.vertex_count(), d.X);
    std::vector<Face> rest;
    for (Face f : d.delta.all_faces())
        if (!std::binary_search(d.X.begin(), d.X.end(), f)) rest.push_back(f);
    d.gamma = SimplicialComplex::from_faces(g.vertex_count(), rest);
    d.delta_is_simplex = !d.delta.is_void() && d.delta.facets().size() == 1;
    return d;
}

Face checkerboard_odd(const Graph& g) {
    Face O = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [r, c] = g.coords(v);
        if (g.usable(v) && (r + c) % 2 == 1) O |= bit(v);
    }
    return O;
}

std::string to_text(const SimplicialComplex& c) {
    std::ostringstream os;
    os << "# ground " << c.ground_size() << "\n";
    for (Face f : c.all_faces()) {
        if (f == 0) {
            os << "{}\n";
            continue;
        }
        bool first = true;
        for_each_bit(f, [&](int v) {
            os << (first ? "" : " ") << v;
            first = false;
        });
        os << "\n";
    }
    return os.str();
}

SimplicialComplex complex_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int ground = 0;
    std::vector<Face> faces;
    while (std::getline(is, line)) {
        if (line.rfind("# ground", 0) == 0) {
            ground = std::stoi(line.substr(8));
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        if (line == "{}") {
            faces.push_back(0);
            continue;
        }
        std::istringstream ls(line);
        Face f = 0;
        int v;
        while (ls >> v) {
            f |= bit(v);
            ground = std::max(ground, v + 1);
        }
        faces.push_back(f);
    }
    return SimplicialComplex::from_faces(ground, faces);
}

std::string to_json(const SimplicialComplex& c) {
    nlohmann::json j;
    j["ground"] = c.ground_size();
    auto dims = nlohmann::json::array();
    for (int k = -1; k <= c.dim(); ++k) {
        auto faces = nlohmann::json::array();
        for (Face f : c.faces(k)) faces.push_back(face_vertices(f));
        dims.push_back({{"dim", k}, {"count", c.faces(k).size()}, {"faces", faces}});
    }
    j["dims"] = dims;
    return j.dump();
}

}  // namespace indcx
