#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indcx/types.hpp"

namespace indcx {

enum class Family { SquareRect, SquareCyl, SquareTorus, HexRect, HexCyl, HexTorus, Parallelogram, Custom };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/**
 * Finite simple graph on dense ids laid out as a rows x cols array.
 *
 * Vertex (row, col), 1-based, has id (row-1)*cols + (col-1). For the square
 * families rows = m and cols = n. The hexagonal families use a brick-wall
 * layout whose array size differs from (m, n); see the builders.
 *
 * `removed` vertices are gone (no incident edges). `blocked` vertices are
 * present but adjacent to themselves, so no independent set contains them.
 */
class Graph {
public:
    Graph() = default;
    Graph(Family family, int m, int n, int rows, int cols);

    Family family() const { return family_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int vertex_count() const { return rows_ * cols_; }
    int id(int row, int col) const;
    std::pair<int, int> coords(int v) const;

    bool live(int v) const { return !removed_[v]; }
    bool blocked(int v) const { return blocked_[v] != 0; }
    bool usable(int v) const { return live(v) && !blocked(v); }
    int live_count() const;
    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> live_vertices() const;

    // Neighbourhood masks; requires vertex_count() <= 64.
    std::vector<Face> masks() const;
    // Live, unblocked vertices as a mask; requires vertex_count() <= 64.
    Face usable_mask() const;
    bool is_independent(Face f) const;

    // Mutators used by the builders; they keep the graph simple.
    void add_edge(int u, int v);
    void set_blocked(int v, bool b = true);
    void remove_vertex(int v);

private:
    Family family_ = Family::Custom;
    int m_ = 0, n_ = 0, rows_ = 0, cols_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<char> removed_;
    std::vector<char> blocked_;
};

Graph build_square_rect(int m, int n);
Graph build_square_cyl(int m, int n);
Graph build_square_torus(int m, int n);

// Brick wall on [m] x [n]: horizontal edges in each row, rung (i,j)-(i+1,j)
// when i+j is even.
Graph build_hex_rect(int m, int n);
// C^H_{m,n}: m+1 rows, 2n columns, rows closed into cycles.
Graph build_hex_cyl(int m, int n);
// T^H_{m,n}: honeycomb torus with m x n cells, m rows and 2n columns.
Graph build_hex_torus(int m, int n);
// P_{m,n}: rows counted from the top, edges (j,k)-(j,k+1) and (j+1,k)-(j,k+1).
Graph build_parallelogram(int m, int n);

Graph build_family(Family f, int m, int n);

struct BoundaryFixed {
    Graph graph;
    int forced_count = 0;
    // False when two forced particles are adjacent: no configuration exists.
    bool feasible = true;
};

// A and B are 1-based row sets (rows counted from the top).
BoundaryFixed fix_boundary(const Graph& g, const std::vector<int>& A, const std::vector<int>& B);
// Row set given as a bitmask, bit j-1 for row j.
BoundaryFixed fix_boundary_mask(const Graph& g, unsigned A, unsigned B);

Graph induced_delete(const Graph& g, const std::vector<int>& S);

// Edge set of C_{m,n} built by wrapping S_{m,n} explicitly.
std::vector<std::pair<int, int>> wrapped_rect_edges(int m, int n);

// Number of translation orbits of a torus graph under (row, col) shifts that
// are automorphisms.
int torus_translation_orbits(const Graph& g);

std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace indcx
