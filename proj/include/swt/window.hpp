#ifndef SWT_WINDOW_HPP
#define SWT_WINDOW_HPP

#include <vector>

namespace swt {

/// The analysis interval [t0, t0 + dt], divided into n equal sub-intervals.
/// Sample values are taken at the sub-interval midpoints.
class AnalysisWindow {
public:
    AnalysisWindow(double t0, double dt, int n);

    double t0() const { return t0_; }
    double dt() const { return dt_; }
    int n() const { return n_; }

    double end() const { return t0_ + dt_; }
    double sub_interval_width() const { return dt_ / n_; }

    /// Midpoint of sub-interval j (1-based): t0 + (j - 1/2) * dt/n.
    double midpoint(int j) const;

    bool contains(double t) const { return t >= t0_ && t <= end(); }

    bool operator==(const AnalysisWindow&) const = default;

private:
    double t0_;
    double dt_;
    int n_;
};

/// Midpoints of all n sub-intervals, strictly increasing.
std::vector<double> midpoints(const AnalysisWindow& window);

/// Frequency of train i within the window: (1/(2 dt)) * n/(n - i + 1).
double train_frequency(const AnalysisWindow& window, int i);

/// Frequencies of all n trains for a window, strictly increasing from
/// 1/(2 dt) up to n/(2 dt).
struct FrequencyGrid {
    int n;
    double dt;
    std::vector<double> frequencies;  // frequencies[i - 1] belongs to train i
};

FrequencyGrid frequency_grid(const AnalysisWindow& window);

}  // namespace swt

#endif
