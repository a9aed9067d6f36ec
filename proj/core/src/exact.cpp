#include "mmst/exact.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace mmst {

std::optional<Decimal> parse_decimal(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) return std::nullopt;

    int128 mantissa = 0;
    int exponent = 0;
    bool any_digit = false;
    bool seen_dot = false;
    constexpr int128 kMantissaLimit = static_cast<int128>(1) << 62;

    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
            continue;
        }
        if (c == 'e' || c == 'E') break;
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        any_digit = true;
        mantissa = mantissa * 10 + (c - '0');
        if (mantissa >= kMantissaLimit) return std::nullopt;
        if (seen_dot) --exponent;
    }
    if (!any_digit) return std::nullopt;

    if (i < text.size()) {  // exponent part
        ++i;
        if (i >= text.size()) return std::nullopt;
        bool exp_neg = false;
        if (text[i] == '+' || text[i] == '-') {
            exp_neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size()) return std::nullopt;
        int e = 0;
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
            e = e * 10 + (text[i] - '0');
            if (e > 10000) return std::nullopt;
        }
        exponent += exp_neg ? -e : e;
    }

    if (negative) mantissa = -mantissa;
    // Drop trailing zeros so equal values share a representation.
    while (mantissa != 0 && mantissa % 10 == 0 && exponent < 0) {
        mantissa /= 10;
        ++exponent;
    }
    if (mantissa == 0) exponent = 0;
    Decimal d;
    d.mantissa = static_cast<std::int64_t>(mantissa);
    d.exponent10 = exponent;
    return d;
}

std::string double_to_decimal_string(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace mmst
