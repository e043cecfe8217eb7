#include "swt/window.hpp"

#include <stdexcept>
#include <string>

namespace swt {

AnalysisWindow::AnalysisWindow(double t0, double dt, int n)
    : t0_(t0), dt_(dt), n_(n) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("window duration must be > 0, got " +
                                    std::to_string(dt));
    }
    if (n < 1) {
        throw std::invalid_argument("window needs at least one sub-interval, got " +
                                    std::to_string(n));
    }
}

double AnalysisWindow::midpoint(int j) const {
    if (j < 1 || j > n_) {
        throw std::out_of_range("sub-interval index " + std::to_string(j) +
                                " outside 1.." + std::to_string(n_));
    }
    return t0_ + (j - 0.5) * sub_interval_width();
}

std::vector<double> midpoints(const AnalysisWindow& window) {
    std::vector<double> m(window.n());
    const double w = window.sub_interval_width();
    for (int j = 1; j <= window.n(); ++j) {
        m[j - 1] = window.t0() + (j - 0.5) * w;
    }
    return m;
}

double train_frequency(const AnalysisWindow& window, int i) {
    const int n = window.n();
    if (i < 1 || i > n) {
        throw std::out_of_range("train index " + std::to_string(i) +
                                " outside 1.." + std::to_string(n));
    }
    return n / (2.0 * window.dt() * (n - i + 1));
}

FrequencyGrid frequency_grid(const AnalysisWindow& window) {
    FrequencyGrid grid{window.n(), window.dt(), {}};
    grid.frequencies.resize(window.n());
    for (int i = 1; i <= window.n(); ++i) {
        grid.frequencies[i - 1] = train_frequency(window, i);
    }
    return grid;
}

}  // namespace swt
