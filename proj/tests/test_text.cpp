#include "gen.hpp"

#include "jetfields/errors.hpp"
#include "jetfields/serialization.hpp"
#include "jetfields/text.hpp"

#include <doctest.h>

using namespace jetfields;

TEST_CASE("parse series") {
  CHECK(parse_series("0", 2, 3).is_zero());
  const Jet f = parse_series("x1^2*x2 - 3/2*x3", 3, 4);
  CHECK(f.coefficient({2, 1, 0}) == 1);
  CHECK(f.coefficient({0, 0, 1}) == Coefficient(-3, 2));
  CHECK(f.terms().size() == 2);
  CHECK(parse_series("(1 + x1)^2", 1, 3) == parse_series("1 + 2*x1 + x1^2", 1, 3));
  CHECK(parse_series(" 4/6 *x1 ", 1, 2).coefficient({1}) == Coefficient(2, 3));
  // cancellation below the order is fine even when an intermediate term is over-degree
  CHECK(parse_series("x1^3 - x1^3 + x1", 1, 2) == Jet::variable(1, 2, 0));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_series("x1 +", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_series("x3", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_series("x1 x2", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_series("1/0", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_series("x1^4", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_field("(x1)*d3", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_map("x1 -> x1", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_map("x1 -> x1; x1 -> x2; x2 -> x2", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_map("x1 -> 1 + x1; x2 -> x2", 2, 3), ParseError);
  try {
    parse_series("x1 + x9", 2, 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("x9") != std::string::npos);
  }
}

TEST_CASE("format") {
  CHECK(format_series(Jet(2, 3)) == "0");
  CHECK(format_series(parse_series("-x1 + 3/2*x2 - x1*x2 + 1", 2, 3)) == "1 - x1 + 3/2*x2 - x1*x2");
  CHECK(format_field(Derivation::zero(2, 3)) == "0");
  CHECK(format_field(parse_field("(x1)*d1 + (x2)*d2", 2, 3)) == "(x1)*d1 + (x2)*d2");
  CHECK(format_field(parse_field("x1*d2", 2, 3)) == "(x1)*d2");
  CHECK(format_map(parse_map("x2 -> x2 + x1^2; x1 -> x1", 2, 3)) == "x1 -> x1; x2 -> x2 + x1^2");
}

TEST_CASE("parse and format round trip") {
  gen::Gen g(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(0, 5);
    const Jet f = g.jet(n, order);
    REQUIRE(parse_series(format_series(f), n, order) == f);
    if (order >= 1) {
      const Derivation d = g.field(n, order);
      REQUIRE(parse_field(format_field(d), n, order) == d);
      const FormalMap s = g.automorphism(n, order);
      REQUIRE(parse_map(format_map(s), n, order) == s);
    }
  }
}

TEST_CASE("json round trip") {
  gen::Gen g(52);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.between(1, 3));
    const int order = g.between(1, 5);
    const Jet f = g.jet(n, order);
    CHECK(jet_from_json(to_json(f)) == f);
    const Derivation d = g.field(n, order);
    CHECK(field_from_json(to_json(d)) == d);
    const FormalMap s = g.automorphism(n, order);
    CHECK(map_from_json(to_json(s)) == s);
  }
  const auto j = to_json(parse_series("-3/2*x2", 2, 3));
  CHECK(j.dump() == R"({"n":2,"order":3,"terms":[{"den":"2","exp":[0,1],"num":"-3"}]})");
}
