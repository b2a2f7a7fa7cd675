#pragma once

#include <string>
#include <vector>

#include "indcx/complex.hpp"
#include "indcx/types.hpp"

namespace indcx {

struct Triplet {
    int row;
    int col;
    BigInt value;
};

// Sparse integer matrix; normalize() merges duplicates and drops zeros.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Triplet> entries;

    void normalize();
    std::vector<std::vector<BigInt>> dense() const;
    static IntegerMatrix from_dense(const std::vector<std::vector<BigInt>>& a);
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/**
 * Matrix of the boundary map from k-faces to (k-1)-faces. Columns follow
 * c.faces(k), rows follow c.faces(k-1); the empty face is the single
 * (-1)-face, so d_0 is the augmentation. Removing the i-th smallest vertex
 * carries sign (-1)^i.
 */
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k);

// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
std::vector<BigInt> smith_normal_form(const IntegerMatrix& m);
long long matrix_rank(const IntegerMatrix& m);

struct DimHomology {
    int dim = 0;
    long long betti = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1
};

struct HomologyProfile {
    std::vector<DimHomology> dims;  // dims -1 .. top, in order

    long long betti(int i) const;
    std::vector<BigInt> torsion(int i) const;
    bool has_torsion() const;
    bool is_trivial() const;
    long long euler() const;  // sum (-1)^i betti_i, i >= -1
    // Nonzero entries as (k,d) pairs, torsion as "T_k:[..]".
    std::string table_entry() const;
    std::string json() const;
    bool operator==(const HomologyProfile& o) const;
    // Same as this, shifted up by s dimensions.
    HomologyProfile shifted(int s) const;
};

// Reduced integer homology, including dimension -1.
HomologyProfile homology_profile(const SimplicialComplex& c);

}  // namespace indcx
