#include "orch5g/units.hpp"

#include <cctype>
#include <cstdlib>

#include "orch5g/errors.hpp"

namespace orch5g {

// Parses "12", "12.5", "-0.25" into an integer scaled by 10^frac_digits.
// More fractional digits than the scale allows is an error rather than a
// silent rounding: scenario authors must stay inside the exact grid.
std::int64_t parse_scaled_decimal(const std::string& text, int frac_digits,
                                  const std::string& field) {
  auto fail = [&](const std::string& why) -> std::int64_t {
    throw OrchError(ErrorKind::SchemaError, field + ": " + why + " ('" + text + "')");
  };

  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) return fail("empty numeric literal");

  std::int64_t scale = 1;
  for (int d = 0; d < frac_digits; ++d) scale *= 10;

  std::int64_t whole = 0;
  std::size_t whole_digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    whole = whole * 10 + (text[i] - '0');
    ++whole_digits;
    ++i;
  }
  if (whole_digits == 0) return fail("expected a digit");

  std::int64_t frac = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    int frac_seen = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (frac_seen >= frac_digits) {
        // digits beyond the grid are only acceptable when they add nothing
        if (text[i] != '0')
          return fail("more than " + std::to_string(frac_digits) + " fractional digits");
        ++i;
        continue;
      }
      frac = frac * 10 + (text[i] - '0');
      ++frac_seen;
      ++i;
    }
    if (frac_seen == 0) return fail("trailing decimal point");
    for (int d = frac_seen; d < frac_digits; ++d) frac *= 10;
  }
  if (i != text.size()) return fail("trailing characters");

  std::int64_t value = whole * scale + frac;
  return negative ? -value : value;
}

// Prints the scaled integer back as a decimal with the minimum number of
// fractional digits (no trailing zeros, no scientific notation) so output is
// byte-stable across platforms.
std::string format_scaled_decimal(std::int64_t value, int frac_digits) {
  bool negative = value < 0;
  std::uint64_t mag = negative ? -static_cast<std::uint64_t>(value) : value;
  std::uint64_t scale = 1;
  for (int d = 0; d < frac_digits; ++d) scale *= 10;

  std::uint64_t whole = mag / scale;
  std::uint64_t frac = mag % scale;
  std::string out = (negative ? "-" : "") + std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), frac_digits - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

}  // namespace orch5g
