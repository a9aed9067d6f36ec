#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mmst {

using int128 = __int128;
using uint128 = unsigned __int128;

// A finite decimal number: value = mantissa * 10^exponent10.
// This is the exact form every coordinate passes through on ingestion; all
// order decisions downstream are made on integers derived from it.
struct Decimal {
    std::int64_t mantissa = 0;
    int exponent10 = 0;
};

// Parses "[+-]digits[.digits][eE[+-]digits]". Returns nullopt on syntax errors
// or when the mantissa cannot be held exactly in 64 bits.
std::optional<Decimal> parse_decimal(std::string_view text);

// Shortest round-trip decimal form of a double (finite values only).
std::string double_to_decimal_string(double v);

inline uint128 abs128(int128 v) {
    return v < 0 ? static_cast<uint128>(-v) : static_cast<uint128>(v);
}

inline int sign128(int128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace mmst
