#ifndef SWT_NUMFMT_HPP
#define SWT_NUMFMT_HPP

#include <optional>
#include <string>

namespace swt {

/// Shortest decimal string that round-trips to the same double.
/// Locale-independent.
std::string format_double(double v);

/// Fixed-point rendering with the given number of decimals.
std::string format_fixed(double v, int decimals);

/// format_fixed when decimals is set, otherwise format_double.
std::string format_value(double v, std::optional<int> decimals);

}  // namespace swt

#endif
