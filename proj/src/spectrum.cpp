#include "swt/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "swt/solver.hpp"
#include "swt/train.hpp"

namespace swt {

SwtSpectrum swt(const SampleSequence& samples, double* residual_inf) {
    const SignMatrix matrix = build_sign_matrix(samples.window.n());
    const CoefficientVector solution = solve_coefficients(matrix, samples);
    if (residual_inf) *residual_inf = solution.residual_inf;

    SwtSpectrum spectrum{samples.window, samples.unit, {}};
    spectrum.dyads.reserve(solution.values.size());
    for (int i = 1; i <= solution.size(); ++i) {
        spectrum.dyads.push_back(Dyad{i, train_frequency(samples.window, i),
                                      solution.values[i - 1]});
    }
    return spectrum;
}

SampleSequence sample_analytic(const SinusoidSum& signal,
                               const AnalysisWindow& window, std::string unit) {
    std::vector<double> values(window.n());
    const double w = window.sub_interval_width();
    for (int j = 1; j <= window.n(); ++j) {
        values[j - 1] = signal.value(window.t0() + (j - 0.5) * w);
    }
    return SampleSequence(window, std::move(values), std::move(unit));
}

double reconstruct(const SwtSpectrum& spectrum, double t) {
    const AnalysisWindow& w = spectrum.window;
    if (!w.contains(t)) {
        throw std::out_of_range("t = " + std::to_string(t) +
                                " outside the analysis window");
    }
    double sum = 0.0;
    for (const Dyad& dyad : spectrum.dyads) {
        sum += train_value(SquareWaveTrain{dyad.index, dyad.coefficient, w}, t);
    }
    return sum;
}

double reconstruction_error(const SinusoidSum& signal,
                            const AnalysisWindow& window, int grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("error grid needs at least 2 points, got " +
                                    std::to_string(grid_points));
    }
    const SwtSpectrum spectrum = swt(sample_analytic(signal, window));

    // Uniform grid over [t0, t0 + dt). Semi-wave transitions happen exactly
    // where k * n is a multiple of grid_points (integer sub-interval
    // coordinate), so those instants are skipped by exact arithmetic.
    const long long n = window.n();
    const long long g = grid_points;
    double sum_sq = 0.0;
    long long kept = 0;
    for (long long k = 0; k < g; ++k) {
        if (k > 0 && (k * n) % g == 0) continue;
        const double t = window.t0() + window.dt() * (static_cast<double>(k) / g);
        const double diff = reconstruct(spectrum, t) - signal.value(t);
        sum_sq += diff * diff;
        ++kept;
    }
    return std::sqrt(sum_sq / kept);
}

SwtSpectrum truncate_spectrum(const SwtSpectrum& spectrum, double fmax) {
    if (!(fmax > 0.0)) {
        throw std::invalid_argument("fmax must be > 0, got " +
                                    std::to_string(fmax));
    }
    SwtSpectrum partial{spectrum.window, spectrum.unit, {}};
    for (const Dyad& dyad : spectrum.dyads) {
        if (dyad.frequency <= fmax) partial.dyads.push_back(dyad);
    }
    return partial;
}

std::vector<SwtSpectrum> compare_across_ns(const SinusoidSum& signal,
                                           double t0, double dt,
                                           const std::vector<int>& ns_list,
                                           double fmax) {
    if (ns_list.empty()) {
        throw std::invalid_argument("ns list must not be empty");
    }
    std::vector<SwtSpectrum> partials;
    partials.reserve(ns_list.size());
    for (int ns : ns_list) {
        const AnalysisWindow window(t0, dt, ns);
        partials.push_back(
            truncate_spectrum(swt(sample_analytic(signal, window)), fmax));
    }
    return partials;
}

}  // namespace swt
