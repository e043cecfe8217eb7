#ifndef SWT_SPECTRUM_HPP
#define SWT_SPECTRUM_HPP

#include <string>
#include <vector>

#include "swt/samples.hpp"
#include "swt/window.hpp"

namespace swt {

/// One (frequency, coefficient) pair of the transform, tagged with its
/// 1-based train index.
struct Dyad {
    int index;
    double frequency;
    double coefficient;

    bool operator==(const Dyad&) const = default;
};

/// The transform of a sample sequence: dyads in strictly increasing
/// frequency order. A full spectrum has one dyad per sub-interval; a
/// truncated spectrum keeps a prefix of them (the window metadata is
/// retained either way).
struct SwtSpectrum {
    AnalysisWindow window;
    std::string unit;
    std::vector<Dyad> dyads;

    bool operator==(const SwtSpectrum&) const = default;
};

/// Transform of a sample sequence: solves the midpoint system and pairs
/// each coefficient with its train frequency. Propagates SingularSystem.
/// When residual_inf is non-null it receives the max-norm residual of the
/// solve.
SwtSpectrum swt(const SampleSequence& samples, double* residual_inf = nullptr);

/// Samples the analytic signal at the window midpoints.
SampleSequence sample_analytic(const SinusoidSum& signal,
                               const AnalysisWindow& window,
                               std::string unit = "");

/// Sum of all train values at time t. Throws std::out_of_range outside the
/// window.
double reconstruct(const SwtSpectrum& spectrum, double t);

/// RMS difference between the reconstruction and the signal over
/// grid_points equally spaced times in [t0, t0 + dt), skipping exact
/// semi-wave transition instants.
double reconstruction_error(const SinusoidSum& signal,
                            const AnalysisWindow& window, int grid_points);

/// Keeps exactly the dyads with frequency <= fmax; may return an empty
/// dyad list.
SwtSpectrum truncate_spectrum(const SwtSpectrum& spectrum, double fmax);

/// Transforms the signal once per entry of ns_list (window t0/dt shared,
/// n = N_s) and truncates each result at fmax. Results are ordered as
/// ns_list.
std::vector<SwtSpectrum> compare_across_ns(const SinusoidSum& signal,
                                           double t0, double dt,
                                           const std::vector<int>& ns_list,
                                           double fmax);

}  // namespace swt

#endif
