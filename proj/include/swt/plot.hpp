#ifndef SWT_PLOT_HPP
#define SWT_PLOT_HPP

#include <string>
#include <vector>

#include "swt/samples.hpp"
#include "swt/spectrum.hpp"

namespace swt {

/// A sampled curve for plotting; x and y must have equal length.
struct Series {
    std::vector<double> x;
    std::vector<double> y;
};

/// All renderers return a standalone SVG 1.1 document. Output bytes are a
/// pure function of the input data: no timestamps, no randomness.

/// Polyline of sample values against midpoint times.
std::string render_signal_svg(const SampleSequence& samples);

/// Stem plot of coefficient against frequency.
std::string render_spectrum_svg(const SwtSpectrum& spectrum);

/// Original curve solid, reconstruction dashed.
std::string render_reconstruction_svg(const Series& original,
                                      const Series& reconstruction,
                                      const std::string& unit = "");

/// Stacked stem plots sharing one abscissa range [0, fmax].
std::string render_comparison_svg(const std::vector<SwtSpectrum>& spectra,
                                  double fmax);

void render_plot(const SampleSequence& samples, const std::string& path);
void render_plot(const SwtSpectrum& spectrum, const std::string& path);
void render_plot(const Series& original, const Series& reconstruction,
                 const std::string& unit, const std::string& path);
void render_plot(const std::vector<SwtSpectrum>& spectra, double fmax,
                 const std::string& path);

}  // namespace swt

#endif
