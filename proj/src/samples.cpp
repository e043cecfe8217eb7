#include "swt/samples.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace swt {

SampleSequence::SampleSequence(AnalysisWindow window, std::vector<double> values,
                               std::string unit)
    : window(window), values(std::move(values)), unit(std::move(unit)) {
    if (this->values.size() != static_cast<std::size_t>(window.n())) {
        throw std::invalid_argument(
            "sample count " + std::to_string(this->values.size()) +
            " does not match the window's " + std::to_string(window.n()) +
            " sub-intervals");
    }
}

double SinusoidSum::value(double t) const {
    double sum = 0.0;
    for (const SinusoidTerm& term : terms) {
        sum += term.amplitude *
               std::sin(2.0 * std::numbers::pi * term.frequency * t + term.phase);
    }
    return sum;
}

}  // namespace swt
