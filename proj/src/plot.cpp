#include "swt/plot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "swt/io.hpp"
#include "swt/numfmt.hpp"

namespace swt {

namespace {

constexpr double kWidth = 800.0;
constexpr double kPanelHeight = 460.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 50.0;

struct Range {
    double lo;
    double hi;
};

Range padded(Range r, double fraction) {
    if (r.lo == r.hi) return {r.lo - 1.0, r.hi + 1.0};
    const double pad = (r.hi - r.lo) * fraction;
    return {r.lo - pad, r.hi + pad};
}

Range value_range(const std::vector<double>& values, bool include_zero) {
    Range r{include_zero ? 0.0 : values.front(),
            include_zero ? 0.0 : values.front()};
    for (double v : values) {
        r.lo = std::min(r.lo, v);
        r.hi = std::max(r.hi, v);
    }
    return r;
}

// Pixel rectangle of one plot area.
struct Panel {
    double left;
    double top;
    double right;
    double bottom;
    Range x;
    Range y;

    double map_x(double v) const {
        return left + (v - x.lo) / (x.hi - x.lo) * (right - left);
    }
    double map_y(double v) const {
        return bottom - (v - y.lo) / (y.hi - y.lo) * (bottom - top);
    }
};

std::string fmt2(double v) { return format_fixed(v, 2); }

struct Tick {
    double value;
    std::string label;
};

// Decimal string of mantissa * 10^exponent without float formatting, so
// tick labels like 0.6 never pick up representation noise.
std::string decimal_label(long long mantissa, int exponent) {
    if (mantissa == 0) return "0";
    const bool negative = mantissa < 0;
    std::string digits = std::to_string(negative ? -mantissa : mantissa);
    std::string s;
    if (exponent >= 0) {
        s = digits + std::string(exponent, '0');
    } else {
        const std::size_t frac = static_cast<std::size_t>(-exponent);
        if (digits.size() <= frac) {
            digits.insert(0, frac - digits.size() + 1, '0');
        }
        s = digits.substr(0, digits.size() - frac) + "." +
            digits.substr(digits.size() - frac);
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return negative ? "-" + s : s;
}

std::vector<Tick> nice_ticks(Range r, int target) {
    const double raw = (r.hi - r.lo) / std::max(1, target);
    int exponent = static_cast<int>(std::floor(std::log10(raw)));
    double magnitude = std::pow(10.0, exponent);
    const double norm = raw / magnitude;
    long long mantissa;
    if (norm <= 1.5) {
        mantissa = 1;
    } else if (norm <= 3.0) {
        mantissa = 2;
    } else if (norm <= 7.0) {
        mantissa = 5;
    } else {
        mantissa = 1;
        ++exponent;
        magnitude *= 10.0;
    }
    const double step = mantissa * magnitude;
    const long long k0 = static_cast<long long>(std::ceil(r.lo / step - 1e-9));
    const long long k1 = static_cast<long long>(std::floor(r.hi / step + 1e-9));
    std::vector<Tick> ticks;
    for (long long k = k0; k <= k1; ++k) {
        ticks.push_back(Tick{k * step, decimal_label(k * mantissa, exponent)});
    }
    return ticks;
}

class Svg {
public:
    Svg(double width, double height) : width_(width), height_(height) {
        buf_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        buf_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                fmt2(width) + "\" height=\"" + fmt2(height) + "\" viewBox=\"0 0 " +
                fmt2(width) + " " + fmt2(height) + "\">\n";
        buf_ += "<rect x=\"0\" y=\"0\" width=\"" + fmt2(width) + "\" height=\"" +
                fmt2(height) + "\" fill=\"#ffffff\"/>\n";
    }

    void line(const std::string& cls, double x1, double y1, double x2, double y2,
              const std::string& stroke, double stroke_width,
              bool dashed = false) {
        buf_ += "<line class=\"" + cls + "\" x1=\"" + fmt2(x1) + "\" y1=\"" +
                fmt2(y1) + "\" x2=\"" + fmt2(x2) + "\" y2=\"" + fmt2(y2) +
                "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                fmt2(stroke_width) + "\"";
        if (dashed) buf_ += " stroke-dasharray=\"6 4\"";
        buf_ += "/>\n";
    }

    void polyline(const std::string& cls, const std::vector<double>& xs,
                  const std::vector<double>& ys, const std::string& stroke,
                  bool dashed = false) {
        buf_ += "<polyline class=\"" + cls + "\" fill=\"none\" stroke=\"" + stroke +
                "\" stroke-width=\"1.5\"";
        if (dashed) buf_ += " stroke-dasharray=\"6 4\"";
        buf_ += " points=\"";
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (k > 0) buf_ += ' ';
            buf_ += fmt2(xs[k]) + "," + fmt2(ys[k]);
        }
        buf_ += "\"/>\n";
    }

    void circle(const std::string& cls, double cx, double cy, double r,
                const std::string& fill) {
        buf_ += "<circle class=\"" + cls + "\" cx=\"" + fmt2(cx) + "\" cy=\"" +
                fmt2(cy) + "\" r=\"" + fmt2(r) + "\" fill=\"" + fill + "\"/>\n";
    }

    void rect(const std::string& cls, double x, double y, double w, double h,
              const std::string& stroke) {
        buf_ += "<rect class=\"" + cls + "\" x=\"" + fmt2(x) + "\" y=\"" +
                fmt2(y) + "\" width=\"" + fmt2(w) + "\" height=\"" + fmt2(h) +
                "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1\"/>\n";
    }

    void text(const std::string& cls, double x, double y,
              const std::string& anchor, const std::string& content) {
        buf_ += "<text class=\"" + cls + "\" x=\"" + fmt2(x) + "\" y=\"" +
                fmt2(y) + "\" text-anchor=\"" + anchor +
                "\" font-family=\"DejaVu Sans, sans-serif\" font-size=\"12\" "
                "fill=\"#333333\">" +
                content + "</text>\n";
    }

    std::string finish() {
        buf_ += "</svg>\n";
        return std::move(buf_);
    }

private:
    double width_;
    double height_;
    std::string buf_;
};

void draw_panel_frame(Svg& svg, const Panel& panel, const std::string& title,
                      const std::string& x_label, const std::string& y_label) {
    svg.rect("frame", panel.left, panel.top, panel.right - panel.left,
             panel.bottom - panel.top, "#333333");

    for (const Tick& tick : nice_ticks(panel.x, 8)) {
        if (tick.value < panel.x.lo || tick.value > panel.x.hi) continue;
        const double px = panel.map_x(tick.value);
        svg.line("tick", px, panel.bottom, px, panel.bottom + 4, "#333333", 1);
        svg.text("ticklabel", px, panel.bottom + 17, "middle", tick.label);
    }
    for (const Tick& tick : nice_ticks(panel.y, 6)) {
        if (tick.value < panel.y.lo || tick.value > panel.y.hi) continue;
        const double py = panel.map_y(tick.value);
        svg.line("tick", panel.left - 4, py, panel.left, py, "#333333", 1);
        svg.text("ticklabel", panel.left - 8, py + 4, "end", tick.label);
    }

    if (!title.empty()) {
        svg.text("title", panel.left, panel.top - 8, "start", title);
    }
    if (!x_label.empty()) {
        svg.text("axislabel", (panel.left + panel.right) / 2.0,
                 panel.bottom + 36, "middle", x_label);
    }
    if (!y_label.empty()) {
        svg.text("axislabel", panel.left, panel.top - 8, "end", y_label);
    }
}

void draw_stems(Svg& svg, const Panel& panel, const SwtSpectrum& spectrum) {
    if (panel.y.lo <= 0.0 && panel.y.hi >= 0.0) {
        const double base = panel.map_y(0.0);
        svg.line("baseline", panel.left, base, panel.right, base, "#888888", 1);
    }
    for (const Dyad& dyad : spectrum.dyads) {
        const double px = panel.map_x(dyad.frequency);
        svg.line("stem", px, panel.map_y(0.0), px, panel.map_y(dyad.coefficient),
                 "#1f77b4", 1.5);
        svg.circle("marker", px, panel.map_y(dyad.coefficient), 2.0, "#1f77b4");
    }
}

Panel spectrum_panel(const SwtSpectrum& spectrum, double top, double bottom,
                     Range x_range) {
    Range y{-1.0, 1.0};
    if (!spectrum.dyads.empty()) {
        std::vector<double> coefficients;
        coefficients.reserve(spectrum.dyads.size());
        for (const Dyad& dyad : spectrum.dyads) {
            coefficients.push_back(dyad.coefficient);
        }
        y = padded(value_range(coefficients, true), 0.05);
    }
    return Panel{kMarginLeft, top, kWidth - kMarginRight, bottom, x_range, y};
}

std::string coefficient_label(const std::string& unit) {
    return unit.empty() ? "coefficient" : "coefficient (" + unit + ")";
}

}  // namespace

std::string render_signal_svg(const SampleSequence& samples) {
    Svg svg(kWidth, kPanelHeight);
    const std::vector<double> times = midpoints(samples.window);
    Panel panel{kMarginLeft, kMarginTop, kWidth - kMarginRight,
                kPanelHeight - kMarginBottom,
                Range{samples.window.t0(), samples.window.end()},
                padded(value_range(samples.values, false), 0.05)};
    draw_panel_frame(svg, panel, "", "t (s)",
                     samples.unit.empty() ? "value" : samples.unit);
    std::vector<double> px(times.size()), py(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        px[k] = panel.map_x(times[k]);
        py[k] = panel.map_y(samples.values[k]);
    }
    svg.polyline("curve", px, py, "#1f77b4");
    return svg.finish();
}

std::string render_spectrum_svg(const SwtSpectrum& spectrum) {
    Svg svg(kWidth, kPanelHeight);
    Range x{0.0, 1.0};
    if (!spectrum.dyads.empty()) {
        x = Range{0.0, spectrum.dyads.back().frequency * 1.04};
    }
    Panel panel = spectrum_panel(spectrum, kMarginTop,
                                 kPanelHeight - kMarginBottom, x);
    draw_panel_frame(svg, panel, "", "frequency (Hz)",
                     coefficient_label(spectrum.unit));
    draw_stems(svg, panel, spectrum);
    return svg.finish();
}

std::string render_reconstruction_svg(const Series& original,
                                      const Series& reconstruction,
                                      const std::string& unit) {
    if (original.x.size() != original.y.size() ||
        reconstruction.x.size() != reconstruction.y.size()) {
        throw std::invalid_argument("series x/y lengths differ");
    }
    if (original.x.empty() || reconstruction.x.empty()) {
        throw std::invalid_argument("reconstruction plot needs both series");
    }
    Svg svg(kWidth, kPanelHeight);
    Range x = value_range(original.x, false);
    {
        const Range rx = value_range(reconstruction.x, false);
        x.lo = std::min(x.lo, rx.lo);
        x.hi = std::max(x.hi, rx.hi);
    }
    Range y = value_range(original.y, false);
    {
        const Range ry = value_range(reconstruction.y, false);
        y.lo = std::min(y.lo, ry.lo);
        y.hi = std::max(y.hi, ry.hi);
    }
    Panel panel{kMarginLeft, kMarginTop, kWidth - kMarginRight,
                kPanelHeight - kMarginBottom, x, padded(y, 0.05)};
    draw_panel_frame(svg, panel, "", "t (s)",
                     unit.empty() ? "value" : unit);

    auto to_pixels = [&](const Series& series, std::vector<double>& px,
                         std::vector<double>& py) {
        px.resize(series.x.size());
        py.resize(series.x.size());
        for (std::size_t k = 0; k < series.x.size(); ++k) {
            px[k] = panel.map_x(series.x[k]);
            py[k] = panel.map_y(series.y[k]);
        }
    };
    std::vector<double> px, py;
    to_pixels(original, px, py);
    svg.polyline("curve original", px, py, "#1f77b4");
    to_pixels(reconstruction, px, py);
    svg.polyline("curve reconstruction", px, py, "#d62728", true);
    return svg.finish();
}

std::string render_comparison_svg(const std::vector<SwtSpectrum>& spectra,
                                  double fmax) {
    if (spectra.empty()) {
        throw std::invalid_argument("comparison plot needs at least one spectrum");
    }
    const double panel_height = 250.0;
    Svg svg(kWidth, panel_height * spectra.size());
    const Range x{0.0, fmax};  // one abscissa scale for every panel
    for (std::size_t p = 0; p < spectra.size(); ++p) {
        const SwtSpectrum& spectrum = spectra[p];
        const double top = panel_height * p + kMarginTop;
        const double bottom = panel_height * (p + 1) - kMarginBottom;
        Panel panel = spectrum_panel(spectrum, top, bottom, x);
        const bool last = p + 1 == spectra.size();
        draw_panel_frame(svg, panel,
                         "n = " + std::to_string(spectrum.window.n()),
                         last ? "frequency (Hz)" : "",
                         coefficient_label(spectrum.unit));
        draw_stems(svg, panel, spectrum);
    }
    return svg.finish();
}

void render_plot(const SampleSequence& samples, const std::string& path) {
    write_text_file(path, render_signal_svg(samples));
}

void render_plot(const SwtSpectrum& spectrum, const std::string& path) {
    write_text_file(path, render_spectrum_svg(spectrum));
}

void render_plot(const Series& original, const Series& reconstruction,
                 const std::string& unit, const std::string& path) {
    write_text_file(path, render_reconstruction_svg(original, reconstruction, unit));
}

void render_plot(const std::vector<SwtSpectrum>& spectra, double fmax,
                 const std::string& path) {
    write_text_file(path, render_comparison_svg(spectra, fmax));
}

}  // namespace swt
