#ifndef SWT_IO_HPP
#define SWT_IO_HPP

#include <optional>
#include <string>

#include "swt/samples.hpp"
#include "swt/spectrum.hpp"

namespace swt {

inline constexpr int kSpectrumSchemaVersion = 1;

enum class SpectrumFormat { Json, Csv };

/// Reads one sample value per line from a UTF-8 text file. Lines starting
/// with '#' and blank lines are skipped; a non-numeric first data line is
/// taken as a single-column CSV header. Exactly one of dt and rate must be
/// given; with a rate, dt = N / rate. Throws EmptyFile, MalformedNumber
/// (with the 1-based line number), ConflictingTimeBase and IoError.
SampleSequence read_samples(const std::string& path, std::optional<double> dt,
                            std::optional<double> rate, double t0 = 0.0,
                            std::string unit = "");

/// JSON document for a spectrum:
///   { "schemaVersion": 1, "window": {"t0":..,"dt":..,"n":..},
///     "unit": "...", "dyads": [{"i":1,"frequency":..,"coefficient":..},..] }
/// Numbers use the shortest round-trip representation, so
/// parse_spectrum_json(spectrum_to_json(s)) == s.
std::string spectrum_to_json(const SwtSpectrum& spectrum);
SwtSpectrum parse_spectrum_json(const std::string& text);

/// CSV rendering: header "i,frequency,coefficient", one dyad per row in
/// ascending index order. Full precision by default; with decimals set,
/// frequencies and coefficients are printed fixed-point (the 4-decimal
/// presentation used for human-readable tables).
std::string spectrum_to_csv(const SwtSpectrum& spectrum,
                            std::optional<int> decimals = std::nullopt);

void write_spectrum(const SwtSpectrum& spectrum, const std::string& path,
                    SpectrumFormat format,
                    std::optional<int> decimals = std::nullopt);

SwtSpectrum read_spectrum(const std::string& path);  // JSON documents only

/// Writes a whole file, surfacing failures as IoError with path context.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace swt

#endif
