#pragma once

#include <cstdint>
#include <string>

namespace orch5g {

// Bandwidth is carried as integer kilobits per second and latency as integer
// nanoseconds. All arithmetic on them is exact, which keeps snapshots,
// comparisons and replay byte-stable. Scenario files express bandwidth in
// mbps (up to 3 fractional digits) and latency in ms (up to 6 fractional
// digits); anything finer is rejected at parse time.
using BwKbps = std::int64_t;
using LatencyNs = std::int64_t;

inline constexpr BwKbps kKbpsPerMbps = 1000;
inline constexpr LatencyNs kNsPerMs = 1'000'000;

// Parses a decimal string ("12.5", "100", "-0.25") into an integer scaled by
// 10^frac_digits. Throws OrchError(SchemaError) on malformed input or when
// the value needs more fractional digits than the grid allows.
std::int64_t parse_scaled_decimal(const std::string& text, int frac_digits,
                                  const std::string& field);

// Inverse of parse_scaled_decimal: renders the scaled integer as the shortest
// decimal string ("12.5" rather than "12.500").
std::string format_scaled_decimal(std::int64_t value, int frac_digits);

inline std::string format_mbps(BwKbps kbps) { return format_scaled_decimal(kbps, 3); }
inline std::string format_ms(LatencyNs ns) { return format_scaled_decimal(ns, 6); }

// Ceiling division for non-negative integers.
inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;
}

}  // namespace orch5g
