#include <cmath>

#include "coincider/errors.hpp"
#include "coincider/mapspec.hpp"
#include "doctest.h"

using namespace coincider;

namespace {

double ev(const std::string& text, int d, const std::vector<double>& x) {
  return eval_double(*parse_expr(text, d), x);
}

Rational evr(const std::string& text, int d, const std::vector<Rational>& x) {
  return eval_rational(*parse_expr(text, d), x);
}

}  // namespace

TEST_CASE("expression parsing and evaluation") {
  CHECK(ev("x1", 1, {0.5}) == 0.5);
  CHECK(ev("2+3*4", 0, {}) == 14.0);
  CHECK(ev("(2+3)*4", 0, {}) == 20.0);
  CHECK(ev("2*3^2", 0, {}) == 18.0);
  CHECK(ev("2^3^2", 0, {}) == 512.0);  // right associative
  CHECK(ev("-x1^2", 1, {2.0}) == -4.0);
  CHECK(ev("10-4-3", 0, {}) == 3.0);
  CHECK(ev("min(x1, max(x2, 0.5))", 2, {0.0, 0.25}) == 0.0);
  CHECK(ev("sin(0)", 0, {}) == 0.0);
  CHECK(ev("cos(0)", 0, {}) == 1.0);
  CHECK(ev("exp(0)", 0, {}) == 1.0);
  CHECK(ev("pow(x1, 0.5)", 1, {4.0}) == doctest::Approx(2.0));
  CHECK(ev("x1 + x2*x2", 2, {0.5, 3.0}) == 9.5);
}

TEST_CASE("exact rational evaluation") {
  const Rational third = make_rational(1, 3);
  CHECK(evr("x1", 1, {third}) == third);
  CHECK(evr("x1 + x2*x2", 2, {make_rational(1, 2), third}) ==
        make_rational(1, 2) + third * third);
  CHECK(evr("x1^3", 1, {make_rational(2, 3)}) == make_rational(8, 27));
  CHECK(evr("x1^-2", 1, {make_rational(2, 3)}) == make_rational(9, 4));
  CHECK(evr("x1^(-2)", 1, {make_rational(2, 3)}) == make_rational(9, 4));
  CHECK(evr("pow(x1, 2)", 1, {make_rational(-3, 5)}) == make_rational(9, 25));
  CHECK(evr("min(x1, max(x2, 1/2))", 2, {Rational(0), make_rational(1, 4)}) == 0);
  CHECK(evr("(x1+1)/x2", 2, {Rational(1), Rational(2)}) == 1);
  CHECK(evr("x1^0", 1, {Rational(0)}) == 1);
  CHECK(evr("1.25*x1", 1, {Rational(4)}) == 5);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(ev("x1/x2", 2, {1.0, 0.0}), EvaluationError);
  CHECK_THROWS_AS(evr("x1/x2", 2, {Rational(1), Rational(0)}), EvaluationError);
  CHECK_THROWS_AS(evr("sin(x1)", 1, {Rational(1)}), NonRationalError);
  CHECK_THROWS_AS(evr("exp(x1)", 1, {Rational(0)}), NonRationalError);
  CHECK_THROWS_AS(evr("x1^(1/2)", 1, {Rational(4)}), NonRationalError);
  CHECK_THROWS_AS(evr("pow(x1, x1)", 1, {Rational(2)}), NonRationalError);
  CHECK_THROWS_AS(evr("x1^-1", 1, {Rational(0)}), EvaluationError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_expr("x1 +", 1), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("", 1), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("foo(x1)", 1), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("x0", 1), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("x3", 2), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("(x1", 1), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("x1 x2", 2), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("min(x1)", 1), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("1..2", 1), InvalidInputError);
  CHECK_THROWS_AS(parse_expr("x1 @ 2", 1), InvalidInputError);
}

TEST_CASE("rational evaluability scan") {
  MapSpec poly;
  poly.d = 2;
  poly.components = {parse_expr("x1^2 + x2/3", 2)};
  CHECK(poly.rational_evaluable());

  MapSpec trig;
  trig.d = 1;
  trig.components = {parse_expr("sin(x1)", 1)};
  CHECK_FALSE(trig.rational_evaluable());

  MapSpec frac_pow;
  frac_pow.d = 1;
  frac_pow.components = {parse_expr("x1^(1/3)", 1)};
  CHECK_FALSE(frac_pow.rational_evaluable());
}

TEST_CASE("map construction from JSON") {
  const MapSpec single = map_from_json_text(R"({"expr":"x1","m":1})", 3);
  CHECK(single.m() == 1);
  CHECK(single.eval(std::vector<double>{0.25, 0.5, 0.0}) == std::vector<double>{0.25});

  const MapSpec pair = map_from_json_text(R"({"exprs":["x1","x2*x2"],"m":2})", 2);
  CHECK(pair.m() == 2);
  const auto out = pair.eval(std::vector<Rational>{make_rational(1, 2), make_rational(1, 3)});
  CHECK(out == std::vector<Rational>{make_rational(1, 2), make_rational(1, 9)});

  const MapSpec lin = map_from_json_text(R"({"builtin":"linear","u":["1","1/2"]})", 2);
  CHECK(lin.m() == 1);
  CHECK(lin.eval(std::vector<Rational>{Rational(2), Rational(4)}) ==
        std::vector<Rational>{Rational(4)});
  CHECK(lin.rational_evaluable());

  CHECK_THROWS_AS(map_from_json_text(R"({"expr":"x1","m":2})", 1), InvalidInputError);
  CHECK_THROWS_AS(map_from_json_text(R"({"builtin":"quadratic"})", 1), InvalidInputError);
  CHECK_THROWS_AS(map_from_json_text(R"({"builtin":"linear","u":["1"]})", 2), InvalidInputError);
  CHECK_THROWS_AS(map_from_json_text(R"({"m":1})", 1), InvalidInputError);
  CHECK_THROWS_AS(map_from_json_text("not json", 1), InvalidInputError);
}

TEST_CASE("map evaluation checks the point dimension") {
  const MapSpec f = map_from_json_text(R"({"expr":"x1"})", 2);
  CHECK_THROWS_AS(f.eval(std::vector<double>{1.0}), EvaluationError);
}
