#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indcx/grid.hpp"
#include "indcx/types.hpp"

namespace indcx {

/**
 * Top-row structure of a face of I(C_{m,n}). pi holds the columns
 * x_1 < ... < x_k of top-row particles; interval N_i runs from x_{i-1}+1 to
 * x_i (cyclically, N_1 wraps past column n). Position parity is counted
 * from the start of each interval, so x_i is odd exactly when |N_i| is odd.
 */
struct IntervalDecomposition {
    int n = 0;
    std::vector<int> pi;
    std::vector<std::vector<int>> intervals;
    std::vector<int> pi_odd, pi_even;

    std::vector<int> sizes() const;
    // Sizes up to rotation, as the lexicographically least rotation.
    std::vector<int> signature() const;
    bool all_even() const;
    bool all_odd() const;
    // Columns at even positions, over all intervals.
    std::vector<int> even_positions() const;
};

std::vector<int> canonical_rotation(std::vector<int> s);

enum class ClassLabel { P1, P2, Q1, Q2, Q3 };
std::string label_name(ClassLabel c);
inline bool in_p3(ClassLabel c) { return c == ClassLabel::Q1 || c == ClassLabel::Q2 || c == ClassLabel::Q3; }

/**
 * Faces are masks over build_square_cyl(m, n); vertex (1, j) is the top-row
 * cell of column j. Requires mn <= 64.
 */
class CylinderIntervals {
public:
    CylinderIntervals(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    const Graph& graph() const { return g_; }
    int top(int col) const { return g_.id(1, col); }

    IntervalDecomposition decompose(Face s) const;
    bool is_free(Face s, int v) const;
    // Adds every free even position of every interval.
    Face closure(Face s) const;
    ClassLabel classify(Face s) const;
    // The class of s, from the closed form around the closure.
    std::vector<Face> equivalence_class(Face s) const;
    // Size of that class without listing it.
    std::size_t class_size(Face s) const;

private:
    int m_, n_;
    Graph g_;
    std::vector<Face> nb_;
};

struct ClassSums {
    int m = 0, n = 0;
    long long total = 0;
    long long p1 = 0, p2 = 0, q1 = 0, q2 = 0, q3 = 0;
    std::size_t c_p1 = 0, c_p2 = 0, c_q1 = 0, c_q2 = 0, c_q3 = 0;
    // closed forms and independent values the sums are checked against
    BigInt z = 0, p2_expected = 0, q1_expected = 0, q3_expected = 0;
    bool classes_match = true;  // closure grouping agrees with the closed form
    bool q2_transfer_checked = false;  // false when the Q2 transfer exceeds its cap
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    std::string json() const;
};

// Enumerates I(C_{m,n}) and sums by class; every check failure is recorded.
ClassSums class_sums(int m, int n, std::size_t max_faces = 20'000'000);

// Closed forms for the P2 and Q1 totals.
BigInt p2_closed_form(int m, int n);
BigInt q1_closed_form(int m, int n);

// Q1 and Q2 totals by a column transfer matrix that carries the interval
// parity of the top row; no enumeration. Throws BudgetExceeded once the
// column state space passes the transfer cap (m around 18).
BigInt q1_sum(int m, int n);
BigInt q2_sum(int m, int n);
/**
 * Unexplained part of Z(C_{m,n}) once the recursion
 * Z(C_{m,n}) = P2 + Q1 + Q2 + Z(C_{m-1,n}) is unrolled down to C_{0,n}
 * with the closed forms for P2 and Q1:
 *   R(m) = Z(C_{m,n}) - (-1)^m - sum_{k<=m} (-1)^{m-k} (E(k) + Q1(k))
 * where P2(k) = -2 Z(C_{k-1,n}) + E(k). Equals sum_{k<=m} (-1)^{m-k} Q2(C_{k,n}).
 */
BigInt unrolled_residual(int m, int n);

struct ResidualCell {
    int m = 0, n = 0;
    BigInt q2 = 0;                    // q2_sum
    std::optional<long long> q2_enumerated;
    BigInt residual = 0;              // unrolled_residual, from Z values
    BigInt residual_from_q2 = 0;      // alternating sum of q2 over k <= m
};

// Rows n = 2, 4, .., max_n; columns m = 1..max_m. Enumeration is attempted
// where the face count fits the budget (0 disables it).
std::vector<ResidualCell> residual_table(int max_n, int max_m, std::size_t enum_budget = 0);

struct PatternSum {
    std::vector<int> pi;
    BigInt sum = 0;      // over tau in Q2 with pi(tau) = pi
    BigInt all_sum = 0;  // over every tau in I(C_{m,n}) with that top row
};

// Every top-row pattern that occurs in Q2 for C_{m,n}, with its sums.
std::vector<PatternSum> conjecture5_scan(int m, int n);
// Sum over tau in Q2 of C_{m,n} with the given top row; the row-2 cells
// below the non-final even positions are forced.
BigInt pattern_sum(int m, int n, const std::vector<int>& pi);
// Same over every tau with that top row, Q2 or not.
BigInt pattern_sum_all(int m, int n, const std::vector<int>& pi);

// Z(C_{m,6}) for m = 1..max_m.
std::vector<BigInt> z_c6_sequence(int max_m);

}  // namespace indcx
