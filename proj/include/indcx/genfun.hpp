#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indcx/poly.hpp"
#include "indcx/types.hpp"

namespace indcx {

using GaussMatrix = std::vector<std::vector<GaussInt>>;

constexpr int kDefaultGenfunCap = 8;

/**
 * T(m): rows and columns are subsets of [m] (bit j-1 for row j);
 * T[A][B] = i^{|A|+|B|} when A and B are disjoint and A misses
 * B' = {j+1 : j in B, j < m}.
 */
GaussMatrix build_Tm(int m, int cap = kDefaultGenfunCap);

// T'(m) over independent sets of the m-path, i^{|A|+|B|} when disjoint.
struct PathTransfer {
    std::vector<Face> states;
    GaussMatrix t;
};
PathTransfer build_Tpm(int m, int cap = kDefaultGenfunCap);

struct SpectraReport {
    bool ok = false;
    IntPoly char_t, char_tp;  // det(xI - T(m)), det(xI - T'(m))
    int extra_zeros = 0;      // multiplicity of 0 in T(m) beyond T'(m)
    int trace_terms = 0;      // tr T^n = tr T'^n checked for n = 1..trace_terms
    std::string message;
};
SpectraReport spectra_match(int m, int trace_terms = 20);

// Z(P_{m,cols}(A,B)), forced particles counted in the sign; 0 if infeasible.
BigInt boundary_z(int m, int cols, unsigned A, unsigned B);

// G_{A,B}(t) coefficients t^0..t^N from powers of T(m).
std::vector<GaussInt> g_series_matrix(int m, unsigned A, unsigned B, int N);
// The same from delta_{A,B} and (-i)^{|A|+|B|} Z(P_{m,n+1}(A,B)).
std::vector<GaussInt> g_series_boundary(int m, unsigned A, unsigned B, int N);
// Both paths; throws std::logic_error if they differ.
std::vector<GaussInt> g_series(int m, unsigned A, unsigned B, int N);
// (T^n)_{A,B} for all A, B and n = 0..N, one matrix per n.
std::vector<GaussMatrix> power_table(int m, int N);
// sum_A G_{A,A}: tr T(m)^n for n = 0..N.
std::vector<GaussInt> trace_series(int m, int N);

/**
 * Least total degree p/q with deg p <= max_num, deg q <= max_den, q(0) = 1
 * and q s = p through every given coefficient; at least `guard` equations
 * beyond the unknowns must hold. Exact over Q(i).
 */
std::optional<RationalQi> rational_fit(const std::vector<GaussInt>& s, int max_num, int max_den, int guard = 2);

struct Lemma11Item {
    unsigned A = 0, B = 0;
    int j = 0;
    bool ok = false;
};
struct Lemma11Report {
    bool ok = true;
    int terms = 0;
    std::vector<Lemma11Item> items;
};
// Every A containing j-1, j, j+1, with B = A - {j}: G_{A,A} + G_{B,B} = 2.
Lemma11Report lemma11_check(int m, int terms = 24);

struct RecursionItem {
    std::string name;
    bool ok = false;
    std::vector<int> failing_j;
    std::string detail;
};
struct RecursionReport {
    bool ok = true;
    int horizon = 0;
    std::vector<RecursionItem> items;
};
/**
 * Column recursions for Z(P_{m,j}(A,B)) used to derive the m = 4 and m = 6
 * closed forms, checked for every j up to the horizon against boundary
 * brute force, plus the truncations G^{(N)} they start from.
 */
RecursionReport recursion_checks(int m, int horizon = 24);

// Bitmask from 1-based rows and back.
unsigned row_mask(const std::vector<int>& rows);
std::vector<int> mask_rows(unsigned a);
std::string set_str(unsigned a);

// "t^k Phi_a^e ..." when p is, up to sign, a power of t times cyclotomics.
std::string cyclotomic_str(const IntPoly& p);
// Human-readable rational function, factored when it is cyclotomic.
std::string factored_str(const RationalQi& r);

}  // namespace indcx
