#ifndef SWT_SAMPLES_HPP
#define SWT_SAMPLES_HPP

#include <string>
#include <vector>

#include "swt/window.hpp"

namespace swt {

/// Ordered sample values V_1..V_n, one per sub-interval midpoint of the
/// window. The value count always equals window.n().
struct SampleSequence {
    AnalysisWindow window;
    std::vector<double> values;
    std::string unit;  // e.g. "uV"; may be empty

    SampleSequence(AnalysisWindow window, std::vector<double> values,
                   std::string unit = "");

    int size() const { return static_cast<int>(values.size()); }
};

struct SinusoidTerm {
    double amplitude;
    double frequency;    // Hz
    double phase = 0.0;  // radians
};

/// Analytic test signal: sum of A_k * sin(2 pi f_k t + phi_k). An empty
/// term list is the zero signal.
struct SinusoidSum {
    std::vector<SinusoidTerm> terms;

    double value(double t) const;
};

}  // namespace swt

#endif
