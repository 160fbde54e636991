#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <string_view>
#include <system_error>

namespace hulthen {

/// Locale-independent full-precision float formatting (17 significant
/// digits, '.' decimal separator). Used for all CSV/tabular output so that
/// identical configurations produce byte-identical files.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::general, 17);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

inline std::string format_int(long long v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Locale-independent parse; returns NaN on malformed input.
inline double parse_double(std::string_view text) {
    double v = std::numeric_limits<double>::quiet_NaN();
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    bool neg = false;
    if (first != last && (*first == '+' || *first == '-')) {
        neg = (*first == '-');
        // from_chars handles the sign for finite values but not "inf"/"nan".
    }
    std::string_view core(first, static_cast<std::size_t>(last - first));
    if (core == "inf" || core == "+inf" || core == "-inf") {
        double inf = std::numeric_limits<double>::infinity();
        return neg ? -inf : inf;
    }
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{}) return std::numeric_limits<double>::quiet_NaN();
    return v;
}

} // namespace hulthen
