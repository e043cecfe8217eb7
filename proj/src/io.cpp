#include "swt/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "swt/errors.hpp"
#include "swt/numfmt.hpp"

namespace swt {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

bool parse_finite_double(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last && std::isfinite(out);
}

}  // namespace

SampleSequence read_samples(const std::string& path, std::optional<double> dt,
                            std::optional<double> rate, double t0,
                            std::string unit) {
    if (dt && rate) {
        throw ConflictingTimeBase("both a window duration and a sampling rate "
                                  "were given; supply exactly one");
    }
    if (!dt && !rate) {
        throw ConflictingTimeBase("a window duration or a sampling rate is "
                                  "required");
    }
    if (dt && !(*dt > 0.0)) {
        throw std::invalid_argument("window duration must be > 0");
    }
    if (rate && !(*rate > 0.0)) {
        throw std::invalid_argument("sampling rate must be > 0");
    }

    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open for reading");

    std::vector<double> values;
    std::string line;
    long line_number = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string_view token = trim(line);
        if (token.empty() || token.front() == '#') continue;
        double value;
        if (!parse_finite_double(token, value)) {
            if (header_allowed) {  // single-column CSV header
                header_allowed = false;
                continue;
            }
            throw MalformedNumber(path, line_number, std::string(token));
        }
        header_allowed = false;
        values.push_back(value);
    }
    if (in.bad()) throw IoError(path, "read failure");
    if (values.empty()) throw EmptyFile(path);

    const int n = static_cast<int>(values.size());
    const double window_dt = dt ? *dt : n / *rate;
    return SampleSequence(AnalysisWindow(t0, window_dt, n), std::move(values),
                          std::move(unit));
}

std::string spectrum_to_json(const SwtSpectrum& spectrum) {
    nlohmann::ordered_json doc;
    doc["schemaVersion"] = kSpectrumSchemaVersion;
    doc["window"] = {{"t0", spectrum.window.t0()},
                     {"dt", spectrum.window.dt()},
                     {"n", spectrum.window.n()}};
    doc["unit"] = spectrum.unit;
    nlohmann::ordered_json dyads = nlohmann::ordered_json::array();
    for (const Dyad& dyad : spectrum.dyads) {
        dyads.push_back({{"i", dyad.index},
                         {"frequency", dyad.frequency},
                         {"coefficient", dyad.coefficient}});
    }
    doc["dyads"] = std::move(dyads);
    return doc.dump(2) + "\n";
}

SwtSpectrum parse_spectrum_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaMismatch(std::string("not a spectrum document: ") + e.what());
    }

    try {
        const int version = doc.at("schemaVersion").get<int>();
        if (version != kSpectrumSchemaVersion) {
            throw SchemaMismatch("unsupported schemaVersion " +
                                 std::to_string(version) + "; expected " +
                                 std::to_string(kSpectrumSchemaVersion));
        }
        const auto& jw = doc.at("window");
        const AnalysisWindow window(jw.at("t0").get<double>(),
                                    jw.at("dt").get<double>(),
                                    jw.at("n").get<int>());
        SwtSpectrum spectrum{window, doc.at("unit").get<std::string>(), {}};
        for (const auto& jd : doc.at("dyads")) {
            spectrum.dyads.push_back(Dyad{jd.at("i").get<int>(),
                                          jd.at("frequency").get<double>(),
                                          jd.at("coefficient").get<double>()});
        }

        int previous_index = 0;
        for (const Dyad& dyad : spectrum.dyads) {
            if (dyad.index <= previous_index || dyad.index > window.n()) {
                throw SchemaMismatch("dyad indices must be strictly increasing "
                                     "within 1.." + std::to_string(window.n()));
            }
            const double expected = train_frequency(window, dyad.index);
            if (std::abs(dyad.frequency - expected) > 1e-9 * expected) {
                throw SchemaMismatch("dyad " + std::to_string(dyad.index) +
                                     " frequency " + format_double(dyad.frequency) +
                                     " does not belong to this window");
            }
            if (!std::isfinite(dyad.coefficient)) {
                throw SchemaMismatch("dyad " + std::to_string(dyad.index) +
                                     " has a non-finite coefficient");
            }
            previous_index = dyad.index;
        }
        return spectrum;
    } catch (const SchemaMismatch&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaMismatch(std::string("not a spectrum document: ") + e.what());
    }
}

std::string spectrum_to_csv(const SwtSpectrum& spectrum,
                            std::optional<int> decimals) {
    std::string out = "i,frequency,coefficient\n";
    for (const Dyad& dyad : spectrum.dyads) {
        out += std::to_string(dyad.index);
        out += ',';
        out += format_value(dyad.frequency, decimals);
        out += ',';
        out += format_value(dyad.coefficient, decimals);
        out += '\n';
    }
    return out;
}

void write_spectrum(const SwtSpectrum& spectrum, const std::string& path,
                    SpectrumFormat format, std::optional<int> decimals) {
    switch (format) {
        case SpectrumFormat::Json:
            write_text_file(path, spectrum_to_json(spectrum));
            break;
        case SpectrumFormat::Csv:
            write_text_file(path, spectrum_to_csv(spectrum, decimals));
            break;
    }
}

SwtSpectrum read_spectrum(const std::string& path) {
    return parse_spectrum_json(read_text_file(path));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError(path, "write failure");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError(path, "read failure");
    return buffer.str();
}

}  // namespace swt
