#include <charconv>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swt/errors.hpp"
#include "swt/io.hpp"
#include "swt/numfmt.hpp"
#include "swt/plot.hpp"
#include "swt/spectrum.hpp"

namespace fs = std::filesystem;

namespace {

// Removes every tracked output when a command fails part-way, so a nonzero
// exit never leaves partial files behind.
class OutputGuard {
public:
    ~OutputGuard() {
        if (committed_) return;
        for (const fs::path& path : paths_) {
            std::error_code ec;
            fs::remove(path, ec);
        }
    }

    void track(const fs::path& path) { paths_.push_back(path); }
    void commit() { committed_ = true; }

private:
    std::vector<fs::path> paths_;
    bool committed_ = false;
};

double parse_number(std::string_view text, const std::string& context) {
    double value = 0.0;
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(text.data(), last, value);
    if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(value)) {
        throw std::invalid_argument("bad " + context + " \"" + std::string(text) +
                                    "\"");
    }
    return value;
}

// "A:F[:P]" -> amplitude, frequency, optional phase (radians)
swt::SinusoidSum parse_sinusoids(const std::vector<std::string>& specs) {
    swt::SinusoidSum signal;
    for (const std::string& spec : specs) {
        std::vector<std::string_view> parts;
        std::string_view rest = spec;
        while (true) {
            const auto colon = rest.find(':');
            if (colon == std::string_view::npos) {
                parts.push_back(rest);
                break;
            }
            parts.push_back(rest.substr(0, colon));
            rest = rest.substr(colon + 1);
        }
        if (parts.size() < 2 || parts.size() > 3) {
            throw std::invalid_argument("bad --sin term \"" + spec +
                                        "\"; expected amp:freq[:phase]");
        }
        swt::SinusoidTerm term;
        term.amplitude = parse_number(parts[0], "--sin amplitude");
        term.frequency = parse_number(parts[1], "--sin frequency");
        term.phase = parts.size() == 3 ? parse_number(parts[2], "--sin phase") : 0.0;
        signal.terms.push_back(term);
    }
    return signal;
}

std::vector<int> parse_ns_list(const std::string& text) {
    std::vector<int> ns_list;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        int value = 0;
        const auto res =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (res.ec != std::errc{} || res.ptr != token.data() + token.size() ||
            value < 1) {
            throw std::invalid_argument("bad --ns entry \"" + std::string(token) +
                                        "\"; need integers >= 1");
        }
        ns_list.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (ns_list.empty()) throw std::invalid_argument("--ns list is empty");
    return ns_list;
}

swt::SpectrumFormat pick_format(const std::string& flag, const fs::path& out) {
    if (flag == "json") return swt::SpectrumFormat::Json;
    if (flag == "csv") return swt::SpectrumFormat::Csv;
    return out.extension() == ".csv" ? swt::SpectrumFormat::Csv
                                     : swt::SpectrumFormat::Json;
}

struct CommonConfig {
    std::string input;
    std::vector<std::string> sins;
    int n = 0;
    std::optional<double> dt;
    std::optional<double> rate;
    double t0 = 0.0;
    std::string out;
    std::string plot;
    std::string format;  // "", "json", "csv"
    std::optional<int> digits;
    int grid = 1000;
    std::string ns;
    double fmax = 0.0;
};

swt::SampleSequence load_signal(const CommonConfig& cfg) {
    if (!cfg.input.empty() && !cfg.sins.empty()) {
        throw std::invalid_argument("--input and --sin are mutually exclusive; "
                                    "give exactly one signal source");
    }
    if (!cfg.input.empty()) {
        if (cfg.n != 0) {
            throw std::invalid_argument("--n is derived from the file; drop it "
                                        "when using --input");
        }
        return swt::read_samples(cfg.input, cfg.dt, cfg.rate, cfg.t0);
    }
    if (!cfg.sins.empty()) {
        if (cfg.rate) {
            throw std::invalid_argument("--rate applies to sampled input only; "
                                        "use --dt with --sin");
        }
        if (cfg.n < 1) {
            throw std::invalid_argument("--sin needs --n (number of "
                                        "sub-intervals/trains)");
        }
        const swt::AnalysisWindow window(cfg.t0, cfg.dt.value_or(1.0), cfg.n);
        return swt::sample_analytic(parse_sinusoids(cfg.sins), window);
    }
    throw std::invalid_argument("no signal source; give --input or --sin");
}

int run_analyze(const CommonConfig& cfg) {
    OutputGuard outputs;
    const swt::SampleSequence samples = load_signal(cfg);
    double residual = 0.0;
    const swt::SwtSpectrum spectrum = swt::swt(samples, &residual);

    outputs.track(cfg.out);
    swt::write_spectrum(spectrum, cfg.out, pick_format(cfg.format, cfg.out),
                        cfg.digits);
    if (!cfg.plot.empty()) {
        outputs.track(cfg.plot);
        swt::render_plot(spectrum, cfg.plot);
    }
    outputs.commit();

    std::cout << "dyads: " << spectrum.dyads.size() << "\n"
              << "residualInf: " << swt::format_double(residual) << "\n";
    return 0;
}

int run_reconstruct(const CommonConfig& cfg) {
    OutputGuard outputs;
    const swt::SwtSpectrum spectrum = swt::read_spectrum(cfg.input);
    if (cfg.grid < 1) throw std::invalid_argument("--grid must be >= 1");
    if (!cfg.plot.empty() && cfg.sins.empty()) {
        throw std::invalid_argument("--plot overlays the original signal; give "
                                    "the --sin terms it should be compared to");
    }

    const swt::AnalysisWindow& window = spectrum.window;
    swt::Series reconstruction;
    reconstruction.x.reserve(cfg.grid);
    reconstruction.y.reserve(cfg.grid);
    std::string csv = "t,value\n";
    for (int k = 0; k < cfg.grid; ++k) {
        const double t =
            window.t0() + window.dt() * (static_cast<double>(k) / cfg.grid);
        const double value = swt::reconstruct(spectrum, t);
        reconstruction.x.push_back(t);
        reconstruction.y.push_back(value);
        csv += swt::format_value(t, cfg.digits);
        csv += ',';
        csv += swt::format_value(value, cfg.digits);
        csv += '\n';
    }

    outputs.track(cfg.out);
    swt::write_text_file(cfg.out, csv);
    if (!cfg.plot.empty()) {
        const swt::SinusoidSum signal = parse_sinusoids(cfg.sins);
        swt::Series original;
        original.x = reconstruction.x;
        original.y.reserve(original.x.size());
        for (double t : original.x) original.y.push_back(signal.value(t));
        outputs.track(cfg.plot);
        swt::render_plot(original, reconstruction, spectrum.unit, cfg.plot);
    }
    outputs.commit();

    std::cout << "points: " << cfg.grid << "\n";
    return 0;
}

int run_compare(const CommonConfig& cfg) {
    OutputGuard outputs;
    if (cfg.sins.empty()) {
        throw std::invalid_argument("compare needs an analytic signal; give "
                                    "--sin terms");
    }
    if (!(cfg.fmax > 0.0)) {
        throw std::invalid_argument("--fmax must be > 0");
    }
    const std::vector<int> ns_list = parse_ns_list(cfg.ns);
    const swt::SinusoidSum signal = parse_sinusoids(cfg.sins);
    const std::vector<swt::SwtSpectrum> partials = swt::compare_across_ns(
        signal, cfg.t0, cfg.dt.value_or(1.0), ns_list, cfg.fmax);

    const fs::path out(cfg.out);
    const std::string extension =
        out.has_extension() ? out.extension().string() : ".json";
    const swt::SpectrumFormat format = pick_format(cfg.format, out);
    for (std::size_t k = 0; k < partials.size(); ++k) {
        fs::path path = out.parent_path() /
                        (out.stem().string() + "-ns" +
                         std::to_string(ns_list[k]) + extension);
        outputs.track(path);
        swt::write_spectrum(partials[k], path.string(), format, cfg.digits);
        std::cout << "wrote " << path.string() << "\n";
    }
    if (!cfg.plot.empty()) {
        outputs.track(cfg.plot);
        swt::render_plot(partials, cfg.fmax, cfg.plot);
        std::cout << "wrote " << cfg.plot << "\n";
    }
    outputs.commit();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square wave transform analysis"};
    app.require_subcommand(1);

    CommonConfig cfg;
    double dt_flag = 0.0;
    double rate_flag = 0.0;
    int digits_flag = -1;

    auto add_common = [&](CLI::App* cmd, bool with_source) {
        if (with_source) {
            cmd->add_option("--input", cfg.input, "sample file, one value per line");
            cmd->add_option("--sin", cfg.sins,
                            "sinusoid term amp:freq[:phase], repeatable");
            cmd->add_option("--n", cfg.n, "sub-interval count for --sin signals");
            cmd->add_option("--rate", rate_flag, "sampling rate in Hz")
                ->check(CLI::PositiveNumber);
        }
        cmd->add_option("--dt", dt_flag, "window duration in seconds")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--t0", cfg.t0, "window start time, default 0");
        cmd->add_option("--out", cfg.out, "output path")->required();
        cmd->add_option("--plot", cfg.plot, "also write an SVG plot");
        cmd->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--digits", digits_flag,
                        "fixed decimal digits in CSV/table output")
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "compute the transform of a signal");
    add_common(analyze, true);

    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "evaluate the square wave sum from a spectrum document");
    reconstruct->add_option("--input", cfg.input, "spectrum JSON document")
        ->required();
    reconstruct->add_option("--grid", cfg.grid,
                            "evaluation points over the window, default 1000");
    reconstruct->add_option("--sin", cfg.sins,
                            "original signal terms for the overlay plot");
    reconstruct->add_option("--out", cfg.out, "output CSV path")->required();
    reconstruct->add_option("--plot", cfg.plot, "overlay SVG path");
    reconstruct->add_option("--digits", digits_flag,
                            "fixed decimal digits in CSV output")
        ->check(CLI::NonNegativeNumber);

    CLI::App* compare = app.add_subcommand(
        "compare", "transforms of one signal across sub-interval counts");
    compare->add_option("--sin", cfg.sins,
                        "sinusoid term amp:freq[:phase], repeatable");
    compare->add_option("--ns", cfg.ns, "comma-separated sub-interval counts")
        ->required();
    compare->add_option("--fmax", cfg.fmax, "keep frequencies <= fmax (Hz)")
        ->required();
    compare->add_option("--dt", dt_flag, "window duration in seconds")
        ->check(CLI::PositiveNumber);
    compare->add_option("--t0", cfg.t0, "window start time, default 0");
    compare->add_option("--out", cfg.out,
                        "base output path; -ns<N> is appended per spectrum")
        ->required();
    compare->add_option("--plot", cfg.plot, "stacked comparison SVG path");
    compare->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    compare->add_option("--digits", digits_flag,
                        "fixed decimal digits in CSV output")
        ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    if (analyze->count("--dt") || compare->count("--dt")) {
        cfg.dt = dt_flag;
    }
    if (analyze->count("--rate")) cfg.rate = rate_flag;
    if (digits_flag >= 0) cfg.digits = digits_flag;

    try {
        if (app.got_subcommand(analyze)) return run_analyze(cfg);
        if (app.got_subcommand(reconstruct)) return run_reconstruct(cfg);
        return run_compare(cfg);
    } catch (const swt::SingularSystem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
