#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "indcx/grid.hpp"
#include "indcx/types.hpp"

namespace indcx {

/**
 * Calls `visit` once for every independent set of g, the empty set
 * included. Dense path: requires at most 64 vertex ids.
 */
void enumerate_independent_sets(const Graph& g, const std::function<void(Face)>& visit);

// Number of independent sets, by enumeration (dense path).
std::size_t count_independent_sets(const Graph& g);

/**
 * Z(G) = sum over independent sets of (-1)^|sigma|.
 *
 * Frontier dynamic program over a vertex order of small pathwidth; memory
 * is bounded by the number of independent frontier states, not by the
 * number of faces. Works for any number of vertices.
 */
BigInt alternating_sum(const Graph& g);
// Same quantity with weight z per particle (z = 1 counts independent sets).
BigInt partition_function(const Graph& g, long z);
// Z by explicit enumeration, for cross-checks on small graphs.
long long alternating_sum_enumerated(const Graph& g);

class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(int ground_size) : ground_(ground_size) {}

    int ground_size() const { return ground_; }
    // Highest dimension present; -1 for {emptyset}, -2 for the void complex.
    int dim() const { return static_cast<int>(by_size_.size()) - 2; }
    bool is_void() const { return by_size_.empty(); }
    std::size_t face_count() const;
    // Faces with k+1 vertices, sorted ascending.
    const std::vector<Face>& faces(int k) const;
    std::vector<Face> all_faces() const;
    std::vector<Face> facets() const;
    bool contains(Face f) const;
    // sum over faces of (-1)^dim, empty face contributing -1
    long long reduced_euler() const;

    // Builders; add() does not close downward.
    void add(Face f);
    void finalize();
    static SimplicialComplex from_faces(int ground, const std::vector<Face>& faces);
    static SimplicialComplex downward_closure(int ground, const std::vector<Face>& generators);
    bool is_downward_closed() const;

private:
    int ground_ = 0;
    std::vector<std::vector<Face>> by_size_;
};

SimplicialComplex independence_complex(const Graph& g, std::size_t max_faces = 2'000'000);
SimplicialComplex cone(const SimplicialComplex& c);
SimplicialComplex susp(const SimplicialComplex& c);

struct ODecomposition {
    std::vector<Face> X;  // unmatched faces of M_O
    SimplicialComplex delta;
    SimplicialComplex gamma;
    // Delta_O has a unique facet, i.e. it is a full simplex.
    bool delta_is_simplex = false;
};

// X, Delta_O, Gamma_O for an independent set O of g.
ODecomposition gamma_delta_O(const Graph& g, Face O);
// Vertices of the odd checkerboard class ((i+j) odd, 1-based) of a grid graph.
Face checkerboard_odd(const Graph& g);

std::string to_text(const SimplicialComplex& c);
SimplicialComplex complex_from_text(const std::string& text);
std::string to_json(const SimplicialComplex& c);

}  // namespace indcx
