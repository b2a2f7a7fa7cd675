#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "indcx/poly.hpp"
#include "indcx/types.hpp"

namespace indcx {

/**
 * Integer transfer matrix over column states (bit patterns). For the
 * square families a state is an independent set of the m-row column and
 * T[s][t] = z^|t| when s and t are disjoint.
 */
struct TransferMatrix {
    std::vector<Face> states;
    std::vector<std::vector<long long>> a;
    std::string label;

    int dim() const { return static_cast<int>(states.size()); }
    std::vector<std::vector<BigInt>> big() const;
};

constexpr std::size_t kDefaultTransferCap = 5000;

TransferMatrix build_transfer_square(int m, long long z = -1, std::size_t cap = kDefaultTransferCap);

enum class HexVariant { Cylinder, Torus };

/**
 * Cylinder: two-column period matrix P = A B over states of the even
 * columns (m+1 rows, rungs at even row offsets); Z(C^H_{m,n}) = tr(P^n).
 * Torus: states are independent sets of the zigzag 2m-cycle of one cell
 * column, position 2a for the upper and 2a+1 for the lower vertex of cell
 * row a; Z(T^H_{m,n}) = tr(T^n).
 */
TransferMatrix build_transfer_hex(int m, HexVariant v, std::size_t cap = kDefaultTransferCap);

// tr(T^k) for k = 1..nmax, exact via several 61-bit primes and CRT.
std::vector<BigInt> power_traces(const TransferMatrix& t, int nmax);
// Same values by exact big-integer matrix products (cross-check path).
std::vector<BigInt> power_traces_exact(const TransferMatrix& t, int nmax);

BigInt z_cylinder(int m, int n);
// Z(S_{m,n}) by iterating a row vector from a free boundary.
BigInt z_rect(int m, int n);
BigInt z_hex_cylinder(int m, int n);
BigInt z_hex_torus(int m, int n);

/**
 * det(tI - A) by fraction-free elimination at dim+1 integer points and
 * Newton interpolation; points are spread over worker threads.
 */
IntPoly char_poly(const std::vector<std::vector<BigInt>>& a);
GaussPoly char_poly(const std::vector<std::vector<GaussInt>>& a);
IntPoly char_poly(const TransferMatrix& t);

// Determinant by Bareiss elimination (exact).
BigInt determinant(std::vector<std::vector<BigInt>> a);
GaussInt determinant(std::vector<std::vector<GaussInt>> a);

struct CyclotomicReport {
    bool is_product = false;
    int stripped_power = 0;                   // k in t^k removed first
    std::vector<std::pair<int, int>> factors;  // (n, multiplicity) of Phi_n
    BigInt period = 1;                         // lcm of the n found
    IntPoly remainder;                         // what is left, +-1 if is_product
    std::string str() const;
};

// bound <= 0 means 2 * deg^2.
CyclotomicReport cyclotomic_test(const IntPoly& p, long long bound = 0);

// p and q agree after stripping powers of t, up to sign and reciprocal.
// `how` receives "direct" or "reciprocal" on success.
bool same_up_to_orientation(const IntPoly& p, const IntPoly& q, std::string* how = nullptr);

}  // namespace indcx
