#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace edim {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow_big(std::int64_t base, std::int64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// Parses an optionally signed decimal string; returns false on any other
/// character.
bool parse_decimal(const std::string& text, BigInt& out);

}  // namespace edim
