#include "swt/solver.hpp"

#include <algorithm>
#include <cmath>

#include "swt/errors.hpp"

namespace swt {

namespace detail {

std::vector<double> lu_solve(std::vector<double> a, int n,
                             std::vector<double> b) {
    double max_entry = 0.0;
    for (double v : a) max_entry = std::max(max_entry, std::abs(v));
    const double pivot_eps = 1e-12 * max_entry;

    for (int k = 0; k < n; ++k) {
        // partial pivoting; ties go to the first row with maximal |value|
        int pivot_row = k;
        double pivot_mag = std::abs(a[static_cast<std::size_t>(k) * n + k]);
        for (int r = k + 1; r < n; ++r) {
            const double mag = std::abs(a[static_cast<std::size_t>(r) * n + k]);
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (!(pivot_mag > pivot_eps)) {
            throw SingularSystem(k, pivot_mag);
        }
        if (pivot_row != k) {
            std::swap_ranges(a.begin() + static_cast<std::size_t>(k) * n,
                             a.begin() + static_cast<std::size_t>(k + 1) * n,
                             a.begin() + static_cast<std::size_t>(pivot_row) * n);
            std::swap(b[k], b[pivot_row]);
        }
        const double* pivot = &a[static_cast<std::size_t>(k) * n];
        for (int r = k + 1; r < n; ++r) {
            double* row = &a[static_cast<std::size_t>(r) * n];
            const double factor = row[k] / pivot[k];
            if (factor != 0.0) {
                for (int c = k + 1; c < n; ++c) row[c] -= factor * pivot[c];
                b[r] -= factor * b[k];
            }
            row[k] = 0.0;
        }
    }

    std::vector<double> x(n);
    for (int k = n - 1; k >= 0; --k) {
        const double* row = &a[static_cast<std::size_t>(k) * n];
        double sum = b[k];
        for (int c = k + 1; c < n; ++c) sum -= row[c] * x[c];
        x[k] = sum / row[k];
    }
    return x;
}

}  // namespace detail

CoefficientVector solve_coefficients(const SignMatrix& matrix,
                                     const SampleSequence& samples) {
    const int n = matrix.n();
    if (n != samples.size()) {
        throw DimensionMismatch("matrix dimension " + std::to_string(n) +
                                " does not match sample count " +
                                std::to_string(samples.size()));
    }

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int j = 1; j <= n; ++j) {
        const std::int8_t* row = matrix.row(j);
        double* dst = &a[static_cast<std::size_t>(j - 1) * n];
        for (int i = 0; i < n; ++i) dst[i] = row[i];
    }

    CoefficientVector result;
    result.values = detail::lu_solve(std::move(a), n, samples.values);
    result.residual_inf =
        factorization_residual(matrix, result.values, samples.values);
    return result;
}

double factorization_residual(const SignMatrix& matrix,
                              std::span<const double> coefficients,
                              std::span<const double> samples) {
    const int n = matrix.n();
    if (coefficients.size() != static_cast<std::size_t>(n) ||
        samples.size() != static_cast<std::size_t>(n)) {
        throw DimensionMismatch("residual needs " + std::to_string(n) +
                                " coefficients and samples");
    }
    double worst = 0.0;
    for (int j = 1; j <= n; ++j) {
        const std::int8_t* row = matrix.row(j);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            sum += row[i] > 0 ? coefficients[i] : -coefficients[i];
        }
        worst = std::max(worst, std::abs(sum - samples[j - 1]));
    }
    return worst;
}

double solve_tolerance(int n, std::span<const double> samples) {
    double max_abs = 0.0;
    for (double v : samples) max_abs = std::max(max_abs, std::abs(v));
    return 1e-9 * n * std::max(1.0, max_abs);
}

}  // namespace swt
