#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <cstdlib>
#include <string>

namespace depmod {

/// Exact value type for every metric. Decimal output is a rendering only.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Rounds half away from zero to `places` digits and trims trailing zeros: 57/20 -> "2.85".
inline std::string to_decimal_string(const Rational& r, int places = 6) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = r < 0;
  const std::int64_t num = negative ? -r.numerator() : r.numerator();
  const std::int64_t den = r.denominator();
  const std::int64_t whole = num / den;
  const std::int64_t rem = num % den;
  // rem/den scaled; rem < den so rem*scale stays in range for the magnitudes used here
  const __int128 scaled = static_cast<__int128>(rem) * scale;
  std::int64_t frac = static_cast<std::int64_t>(scaled / den);
  const __int128 leftover = scaled % den;
  std::int64_t int_part = whole;
  if (leftover * 2 >= den) {
    ++frac;
    if (frac == scale) {
      frac = 0;
      ++int_part;
    }
  }
  std::string out = (negative && (int_part != 0 || frac != 0)) ? "-" : "";
  out += std::to_string(int_part);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

inline double to_decimal(const Rational& r, int places = 6) {
  return std::strtod(to_decimal_string(r, places).c_str(), nullptr);
}

/// "57/20 (2.85)"
inline std::string to_display(const Rational& r) {
  if (r.denominator() == 1) return to_string(r);
  return to_string(r) + " (" + to_decimal_string(r) + ")";
}

}  // namespace depmod
