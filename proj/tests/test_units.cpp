#include "doctest.h"
#include "orch5g/errors.hpp"
#include "orch5g/units.hpp"

using namespace orch5g;

TEST_CASE("scaled decimal parsing lands exactly on the grid") {
  CHECK(parse_scaled_decimal("100", 3, "bw") == 100'000);
  CHECK(parse_scaled_decimal("12.5", 3, "bw") == 12'500);
  CHECK(parse_scaled_decimal("0.001", 3, "bw") == 1);
  CHECK(parse_scaled_decimal("0", 3, "bw") == 0);
  CHECK(parse_scaled_decimal("-0.25", 6, "lat") == -250'000);
  CHECK(parse_scaled_decimal("0.000001", 6, "lat") == 1);
  // trailing zeros are fine as long as the value stays on the grid
  CHECK(parse_scaled_decimal("2.500", 3, "bw") == 2'500);
  CHECK(parse_scaled_decimal("2.5000", 3, "bw") == 2'500);
}

TEST_CASE("scaled decimal parsing rejects off-grid and malformed input") {
  CHECK_THROWS_AS(parse_scaled_decimal("0.0001", 3, "bw"), OrchError);
  CHECK_THROWS_AS(parse_scaled_decimal("", 3, "bw"), OrchError);
  CHECK_THROWS_AS(parse_scaled_decimal("12.", 3, "bw"), OrchError);
  CHECK_THROWS_AS(parse_scaled_decimal(".5", 3, "bw"), OrchError);
  CHECK_THROWS_AS(parse_scaled_decimal("1e3", 3, "bw"), OrchError);
  CHECK_THROWS_AS(parse_scaled_decimal("12a", 3, "bw"), OrchError);
  CHECK_THROWS_AS(parse_scaled_decimal("1.2.3", 3, "bw"), OrchError);

  try {
    parse_scaled_decimal("0.0001", 3, "bw_mbps");
    FAIL("expected an error");
  } catch (const OrchError& e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
    CHECK(e.detail().find("bw_mbps") != std::string::npos);
  }
}

TEST_CASE("formatting renders the shortest decimal form") {
  CHECK(format_scaled_decimal(12'500, 3) == "12.5");
  CHECK(format_scaled_decimal(100'000, 3) == "100");
  CHECK(format_scaled_decimal(1, 3) == "0.001");
  CHECK(format_scaled_decimal(0, 3) == "0");
  CHECK(format_scaled_decimal(-250'000, 6) == "-0.25");
  CHECK(format_mbps(2'500) == "2.5");
  CHECK(format_ms(12'000'000) == "12");
}

TEST_CASE("parse and format are inverse on the grid") {
  for (std::int64_t v : {0ll, 1ll, 999ll, 1000ll, 12'500ll, 1'000'000ll, -42ll}) {
    CHECK(parse_scaled_decimal(format_scaled_decimal(v, 3), 3, "x") == v);
    CHECK(parse_scaled_decimal(format_scaled_decimal(v, 6), 6, "x") == v);
  }
}

TEST_CASE("ceiling division") {
  CHECK(ceil_div(0, 4) == 0);
  CHECK(ceil_div(1, 4) == 1);
  CHECK(ceil_div(4, 4) == 1);
  CHECK(ceil_div(5, 4) == 2);
  CHECK(ceil_div(100'000, 12'500'000) == 1);
}

TEST_CASE("error kind names round-trip") {
  CHECK(std::string(error_kind_name(ErrorKind::CapacityExceeded)) == "CapacityExceeded");
  ErrorKind kind;
  CHECK(parse_error_kind("NoSpectrum", kind));
  CHECK(kind == ErrorKind::NoSpectrum);
  CHECK(parse_error_kind("Injected", kind));
  CHECK_FALSE(parse_error_kind("NotAKind", kind));
  CHECK_FALSE(parse_error_kind("", kind));
}
