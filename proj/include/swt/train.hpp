#ifndef SWT_TRAIN_HPP
#define SWT_TRAIN_HPP

#include "swt/window.hpp"

namespace swt {

/// One train of square waves: semi-waves of constant value +|C| / -|C|,
/// each spanning (n - i + 1) sub-intervals, starting positive at t0.
struct SquareWaveTrain {
    int index;            // i, 1..n
    double coefficient;   // C_i; |C_i| is the train amplitude
    AnalysisWindow window;

    double half_period() const {
        return window.dt() * (window.n() - index + 1) / window.n();
    }

    double frequency() const { return train_frequency(window, index); }
};

/// Value of the train at time t inside the window. A sign transition
/// belongs to the semi-wave that starts there; at t = t0 + dt the value of
/// the final semi-wave is returned. Throws std::out_of_range outside the
/// window.
double train_value(const SquareWaveTrain& train, double t);

}  // namespace swt

#endif
