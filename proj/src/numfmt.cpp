#include "swt/numfmt.hpp"

#include <charconv>
#include <system_error>

namespace swt {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
    char buf[512];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::fixed, decimals);
    if (res.ec != std::errc{}) return format_double(v);
    return std::string(buf, res.ptr);
}

std::string format_value(double v, std::optional<int> decimals) {
    return decimals ? format_fixed(v, *decimals) : format_double(v);
}

}  // namespace swt
