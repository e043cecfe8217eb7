#ifndef SWT_SOLVER_HPP
#define SWT_SOLVER_HPP

#include <span>
#include <vector>

#include "swt/samples.hpp"
#include "swt/sign_matrix.hpp"

namespace swt {

/// Solution of the midpoint system M * C = V.
struct CoefficientVector {
    std::vector<double> values;  // C_1..C_n
    double residual_inf;         // max-norm of M*C - V

    int size() const { return static_cast<int>(values.size()); }
};

/// Solves M * C = V by dense LU factorization with partial row pivoting.
/// Deterministic: ties in pivot selection go to the first row with maximal
/// absolute value. Throws SingularSystem when a pivot magnitude falls below
/// 1e-12 (relative to the largest entry magnitude, 1 for a sign matrix) and
/// DimensionMismatch when matrix and samples disagree in size.
CoefficientVector solve_coefficients(const SignMatrix& matrix,
                                     const SampleSequence& samples);

/// max_j | sum_i M[j][i] * C_i - V_j |
double factorization_residual(const SignMatrix& matrix,
                              std::span<const double> coefficients,
                              std::span<const double> samples);

/// Residual bound accepted solutions satisfy: 1e-9 * n * max(1, max|V|).
double solve_tolerance(int n, std::span<const double> samples);

namespace detail {

/// In-place LU solve of a dense row-major n x n system. Exposed for tests
/// that need to drive the singular path with matrices the SignMatrix type
/// cannot represent.
std::vector<double> lu_solve(std::vector<double> matrix, int n,
                             std::vector<double> rhs);

}  // namespace detail

}  // namespace swt

#endif
