#include "swt/train.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swt {

double train_value(const SquareWaveTrain& train, double t) {
    const AnalysisWindow& w = train.window;
    if (!w.contains(t)) {
        throw std::out_of_range("t = " + std::to_string(t) +
                                " outside the analysis window");
    }
    const int n = w.n();
    const int block = n - train.index + 1;
    int semi_wave;
    if (t == w.end()) {
        // left limit: the semi-wave covering the last sub-interval
        semi_wave = (n - 1) / block;
    } else {
        // Position in sub-interval units; semi-wave boundaries sit at exact
        // integer multiples of block, so a transition instant already
        // belongs to the semi-wave that starts there.
        const double u = (t - w.t0()) * n / w.dt();
        semi_wave = static_cast<int>(std::floor(u / block));
    }
    return (semi_wave % 2 != 0) ? -train.coefficient : train.coefficient;
}

}  // namespace swt
