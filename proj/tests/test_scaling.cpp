#include <doctest.h>

#include <cmath>

#include "listcolor/errors.hpp"
#include "listcolor/scaling.hpp"

using namespace listcolor;

TEST_CASE("scaling examples") {
  CHECK(parse_scaling("2*n").evaluate_int(30) == 60);
  auto e = parse_scaling("floor: n^(1/4) * 3");
  CHECK(e.rounding() == Rounding::Floor);
  CHECK(e.evaluate_int(16) == 6);
  CHECK(parse_scaling("log(n)").evaluate(std::exp(2.0)) == doctest::Approx(2.0));
}

TEST_CASE("associativity and precedence") {
  CHECK(parse_scaling("2^3^2").evaluate(3) == doctest::Approx(512));
  CHECK(parse_scaling("8/4/2").evaluate(3) == doctest::Approx(1));
  CHECK(parse_scaling("10-3-2").evaluate(3) == doctest::Approx(5));
  CHECK(parse_scaling("1+2*3").evaluate(3) == doctest::Approx(7));
  CHECK(parse_scaling("(1+2)*3").evaluate(3) == doctest::Approx(9));
  CHECK(parse_scaling(" n ^ 0.5 ").evaluate(49) == doctest::Approx(7));
  CHECK(parse_scaling("2*n^(1/2)").evaluate(16) == doctest::Approx(8));
  CHECK(parse_scaling("1.5e1").evaluate(3) == doctest::Approx(15));
}

TEST_CASE("rounding modes") {
  CHECK(parse_scaling("n/4").evaluate_int(10) == 3);
  CHECK(parse_scaling("ceil: n/4").evaluate_int(9) == 3);
  CHECK(parse_scaling("floor: n/4").evaluate_int(11) == 2);
  CHECK(parse_scaling("round: n/4").evaluate_int(11) == 3);
  // values within 1e-9 of an integer snap before rounding
  CHECK(parse_scaling("ceil: n^(1/3)").evaluate_int(27) == 3);
  CHECK(parse_scaling("floor: n^(1/3)").evaluate_int(64) == 4);
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_scaling(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("2*") == 2);
  CHECK(offset_of("2 + x") == 4);
  CHECK(offset_of("(n") == 2);
  CHECK(offset_of("n)") == 1);
  CHECK(offset_of("1/0") == 2);
  CHECK(offset_of("log(0)") == 4);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("sqrt: n") != std::string::npos);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(parse_scaling("1/(n-3)").evaluate(3), InvalidParameters);
  CHECK_THROWS_AS(parse_scaling("log(n-5)").evaluate(4), InvalidParameters);
  try {
    parse_scaling("1 + 1/(n-3)").evaluate(3);
  } catch (const InvalidParameters& e) {
    CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
  }
  CHECK_NOTHROW(parse_scaling("n^(1/4)*log(n)").evaluate(3));
}
