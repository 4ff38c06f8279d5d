#include <doctest.h>

#include <random>

#include "hlkit/errors.hpp"
#include "hlkit/laurent_poly.hpp"
#include "hlkit/xpoly.hpp"
#include "oracles.hpp"

using namespace hlkit;

namespace {
const LaurentPoly t = LaurentPoly::t();
XPoly x(std::size_t n, std::size_t i) { return XPoly::variable(n, i); }
}  // namespace

TEST_CASE("laurent arithmetic examples") {
  CHECK((1 - t) * (1 + t) == 1 - t.pow(2));
  CHECK(LaurentPoly::t(-1) * t == LaurentPoly(1));
  CHECK((1 - t) * (1 - t.pow(2)) == LaurentPoly::parse("1 - t - t^2 + t^3"));
  CHECK((t - t).is_zero());
  CHECK(LaurentPoly(0).is_zero());
}

TEST_CASE("laurent exact division") {
  CHECK(exact_div(1 - t.pow(2), 1 - t) == 1 + t);
  CHECK(exact_div(1 - t, 1 - t) == LaurentPoly(1));
  CHECK(exact_div(t - t.pow(3), 1 - t.pow(2)) == t);
  CHECK(exact_div(LaurentPoly::t(-2) - LaurentPoly::t(1), 1 - t) ==
        LaurentPoly::t(-2) + LaurentPoly::t(-1) + LaurentPoly(1));
  CHECK_THROWS_AS(exact_div(1 + t, 1 - t), NotDivisible);
  CHECK_THROWS_AS(LaurentPoly(3).divided_by(2), NotDivisible);
  CHECK_THROWS(exact_div(t, LaurentPoly()));
}

TEST_CASE("laurent arithmetic agrees with rational evaluation") {
  std::mt19937 rng(11);
  const mpq_class points[] = {mpq_class(2), mpq_class(-3), mpq_class(1, 2), mpq_class(5, 7)};
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = oracle::random_laurent(rng, -3, 4, 6);
    const LaurentPoly b = oracle::random_laurent(rng, -2, 3, 6);
    for (const auto& p : points) {
      CHECK(oracle::eval(a + b, p) == oracle::eval(a, p) + oracle::eval(b, p));
      CHECK(oracle::eval(a - b, p) == oracle::eval(a, p) - oracle::eval(b, p));
      CHECK(oracle::eval(a * b, p) == oracle::eval(a, p) * oracle::eval(b, p));
    }
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("laurent canonical form and parsing") {
  const LaurentPoly p = LaurentPoly::parse("2*t^-3 - t + 5");
  CHECK(p.low_degree() == -3);
  CHECK(p.high_degree() == 1);
  CHECK(p.coeff(-3) == 2);
  CHECK(p.coeff(0) == 5);
  CHECK(p.coeff(-2) == 0);
  CHECK(LaurentPoly::parse(p.to_string()) == p);
  CHECK(LaurentPoly::parse(p.to_compact_string()) == p);
  CHECK_THROWS_AS(LaurentPoly::parse("(1+t)"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse("1 + + t"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse(""), ParseError);
}

TEST_CASE("t-pochhammer range") {
  CHECK(t_pochhammer_range(1, 0) == LaurentPoly(1));
  CHECK(t_pochhammer_range(1, 2) == (1 - t) * (1 - t.pow(2)));
  CHECK(t_pochhammer_range(3, 3) == 1 - t.pow(3));
}

TEST_CASE("xpoly exact division by a linear form") {
  const XPoly x1 = x(2, 0), x2 = x(2, 1);
  CHECK(xp_exact_div_linear(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);
  CHECK(xp_exact_div_linear(x1 * x2 - x2 * x1, x1 - x2).is_zero());
  CHECK(xp_exact_div_linear(x1 * x1 * x2 - x1 * x2 * x2, x1 - x2) == x1 * x2);
  CHECK_THROWS_AS(xp_exact_div_linear(x1 + XPoly::constant(2, 1), x1 - x2), NotDivisible);
}

TEST_CASE("xpoly division by a difference handles Laurent exponents") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const XPoly q = oracle::random_xpoly(rng, 3, 3, 4, -2);
    const XPoly d = x(3, 0) - x(3, 2);
    CHECK(divide_by_difference(q * d, 0, 2) == q);
  }
}

TEST_CASE("xpoly ring operations agree with rational evaluation") {
  std::mt19937 rng(7);
  const std::vector<mpq_class> pt = {mpq_class(2), mpq_class(-1, 3), mpq_class(3, 2)};
  const mpq_class tv(5, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const XPoly a = oracle::random_xpoly(rng, 3, 3, 5, -1);
    const XPoly b = oracle::random_xpoly(rng, 3, 2, 4);
    CHECK(oracle::eval(a * b, pt, tv) == oracle::eval(a, pt, tv) * oracle::eval(b, pt, tv));
    CHECK(oracle::eval(a - b, pt, tv) == oracle::eval(a, pt, tv) - oracle::eval(b, pt, tv));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("xpoly truncated products keep exactly the low weights") {
  std::mt19937 rng(9);
  const std::vector<int> w = {1, 2};
  for (int trial = 0; trial < 30; ++trial) {
    const XPoly a = oracle::random_xpoly(rng, 2, 4, 5);
    const XPoly b = oracle::random_xpoly(rng, 2, 4, 5);
    CHECK(a.mul_truncated(b, w, 5) == (a * b).truncated(w, 5));
  }
}

TEST_CASE("xpoly guards") {
  CHECK_THROWS_AS(XPoly(2).add_term({1}, 1), LengthMismatch);
  CHECK_THROWS_AS(XPoly::variable(2, 2), IndexOutOfRange);
  CHECK_THROWS(XPoly(2) + XPoly(3));
  XPoly p(2);
  p.add_term({1, 0}, 1);
  p.add_term({1, 0}, -1);
  CHECK(p.is_zero());
  CHECK(p.size() == 0);
}

TEST_CASE("xpoly rendering") {
  const XPoly x1 = x(2, 0), x2 = x(2, 1);
  CHECK((x1 * x1 - t * x2).to_string() == "x1^2 - t*x2");
  CHECK(XPoly(2).to_string() == "0");
  CHECK(((1 + t) * x1 * x2).to_string() == "(1+t)*x1*x2");
}
