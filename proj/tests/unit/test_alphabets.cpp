#include <doctest.h>

#include "hlkit/alphabet.hpp"
#include "hlkit/errors.hpp"
#include "oracles.hpp"

using namespace hlkit;

namespace {

const LaurentPoly t = LaurentPoly::t();

XPoly schur_by_tableaux(const Partition& lam, std::size_t n) {
  XPoly s(n);
  for (const IntVector& w : oracle::box(n, 0, lam.size())) {
    int total = 0;
    for (int v : w) total += v;
    if (total != lam.size()) continue;
    const auto count = oracle::brute_ssyt(lam, w).size();
    if (count) s.add_term(w, static_cast<long>(count));
  }
  return s;
}

}  // namespace

TEST_CASE("alphabet normal form") {
  const Alphabet x = Alphabet::variables(2, 0, 1);
  const Alphabet y = Alphabet::variables(2, 1, 1);
  CHECK((x + y - x) == y);
  CHECK((x - x) == Alphabet(2));
  CHECK((x + y) == (y + x));
  CHECK(-(x - y) == (y - x));
  CHECK(x.times_one_minus_t() == x - Alphabet::letter(2, 1, {1, 0}));
  CHECK_THROWS_AS(Alphabet::variables(2, 1, 2), IndexOutOfRange);
}

TEST_CASE("complete functions") {
  const XPoly x = XPoly::variable(1, 0);
  const Alphabet X = Alphabet::variables(1, 0, 1);
  const auto h = X.complete(4);
  for (unsigned k = 0; k <= 4; ++k) CHECK(h[k] == x.pow(k));
  const auto h1 = (Alphabet::t_power(1, 0) - X).complete(3);
  CHECK(h1[1] == XPoly::constant(1, 1) - x);
  CHECK(h1[2] == XPoly::constant(1, 1) - x);
  const XPoly a = XPoly::variable(2, 0), b = XPoly::variable(2, 1);
  const auto h2 = (Alphabet::variables(2, 0, 1) - Alphabet::variables(2, 1, 1)).complete(2);
  CHECK(h2[2] == a * a - a * b);
  const auto e = Alphabet::variables(2, 0, 2).elementary(3);
  CHECK(e[1] == a + b);
  CHECK(e[2] == a * b);
  CHECK(e[3].is_zero());
}

TEST_CASE("power sums are additive") {
  const auto ctx = AlphabetContext::standard(2, 1);
  const Alphabet A = parse_alphabet("X - t*Y", ctx);
  const Alphabet B = parse_alphabet("x1*y1 + 2", ctx);
  for (int k = 1; k <= 4; ++k) CHECK((A + B).power_sum(k) == A.power_sum(k) + B.power_sum(k));
  const XPoly x1 = XPoly::variable(3, 0), x2 = XPoly::variable(3, 1), y1 = XPoly::variable(3, 2);
  CHECK(A.power_sum(2) == x1 * x1 + x2 * x2 - t.pow(2) * y1 * y1);
}

TEST_CASE("schur functions on the empty alphabet") {
  for (const Partition& lam : partitions_up_to(4)) {
    const XPoly s = schur_eval(lam, Alphabet(2));
    CHECK(s == (lam.empty() ? XPoly::constant(2, 1) : XPoly(2)));
  }
}

TEST_CASE("schur functions of variables match tableau sums") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Partition& lam : partitions_up_to(5)) CHECK(schur_eval(lam, Alphabet::variables(n, 0, n)) == schur_by_tableaux(lam, n));
}

TEST_CASE("schur functions of negated variables use the conjugate") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Partition& lam : partitions_up_to(5)) {
      const XPoly lhs = schur_eval(lam, -Alphabet::variables(n, 0, n));
      const XPoly rhs = schur_by_tableaux(conjugate(lam), n) * LaurentPoly(lam.size() % 2 ? -1 : 1);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("row and column determinants agree") {
  const auto ctx = AlphabetContext::standard(2, 2);
  for (const char* text : {"X - Y", "1 - X", "t^2 - X", "X*Y - t*X*Y", "X + Y + 1"}) {
    const Alphabet A = parse_alphabet(text, ctx);
    for (const Partition& lam : partitions_up_to(5)) CHECK(schur_eval(lam, A) == skew_schur_eval(lam, {}, A));
  }
}

TEST_CASE("schur function examples on differences") {
  const XPoly a = XPoly::variable(2, 0), b = XPoly::variable(2, 1);
  const Alphabet A = Alphabet::variables(2, 0, 1), B = Alphabet::variables(2, 1, 1);
  CHECK(schur_eval({1, 1}, A - B) == -b * (a - b));
  const XPoly a1 = XPoly::variable(3, 0), a2 = XPoly::variable(3, 1), b1 = XPoly::variable(3, 2);
  CHECK(schur_eval({1, 1}, Alphabet::variables(3, 0, 2) - Alphabet::variables(3, 2, 1)) == (a1 - b1) * (a2 - b1));
}

TEST_CASE("skew schur functions") {
  const Alphabet X = Alphabet::variables(3, 0, 3);
  CHECK(skew_schur_eval({2, 1}, {2, 1}, X) == XPoly::constant(3, 1));
  CHECK(skew_schur_eval({2, 1}, {3}, X).is_zero());
  CHECK(skew_schur_eval({2, 1}, {1}, X) == schur_eval({2}, X) + schur_eval({1, 1}, X));
}

TEST_CASE("resultant") {
  const XPoly x = XPoly::variable(1, 0);
  CHECK(resultant(Letter{0, {0}}, Alphabet::variables(1, 0, 1)) == XPoly::constant(1, 1) - x);
  const XPoly x1 = XPoly::variable(2, 0), x2 = XPoly::variable(2, 1);
  const XPoly T = XPoly::constant(2, t);
  CHECK(resultant(Letter{1, {0, 0}}, Alphabet::variables(2, 0, 2)) == (T - x1) * (T - x2));
  const XPoly one = XPoly::constant(2, 1);
  CHECK(resultant(Letter{0, {0, 0}}, Alphabet::variables(2, 0, 2)) * resultant(Letter{1, {0, 0}}, Alphabet::variables(2, 0, 2)) ==
        (one - x1) * (one - x2) * (T - x1) * (T - x2));
  CHECK_THROWS_AS(resultant(Letter{0, {0}}, -Alphabet::variables(1, 0, 1)), PreconditionViolation);
}

TEST_CASE("rectangle factorization over differences") {
  const Alphabet a = Alphabet::variables(2, 0, 1), b = Alphabet::variables(2, 1, 1);
  CHECK(berele_regev_check({}, {1}, a, b));
  CHECK(berele_regev_check({1}, {}, a, b));
  CHECK(berele_regev_vanishing_check({2, 2}, a, b));
  const Alphabet A = Alphabet::variables(5, 0, 2), B = Alphabet::variables(5, 2, 3);
  for (const Partition& nu : partitions_up_to(3, 2))
    for (const Partition& zeta : partitions_up_to(3)) {
      if (zeta.part(1) > 3) continue;
      CHECK(berele_regev_check(nu, zeta, A, B));
    }
  CHECK(berele_regev_vanishing_check({4, 4, 4}, A, B));
  CHECK_THROWS_AS(berele_regev_check({}, {4}, A, B), PreconditionViolation);
  CHECK_THROWS_AS(berele_regev_vanishing_check({3, 3}, A, B), PreconditionViolation);
}

TEST_CASE("alphabet parser") {
  const auto ctx = AlphabetContext::standard(2, 1);
  const Alphabet X = Alphabet::variables(3, 0, 2);
  CHECK(parse_alphabet("X", ctx) == X);
  CHECK(parse_alphabet("x1 + x2", ctx) == X);
  CHECK(parse_alphabet("1 - X", ctx) == Alphabet::t_power(3, 0) - X);
  CHECK(parse_alphabet("t^2 - X", ctx) == Alphabet::t_power(3, 2) - X);
  CHECK(parse_alphabet("X*(1 - t)", ctx) == X.times_one_minus_t());
  CHECK(parse_alphabet("3", ctx) == Alphabet::t_power(3, 0) + Alphabet::t_power(3, 0) + Alphabet::t_power(3, 0));
  CHECK(parse_alphabet("t^-1*X", ctx) == X * Alphabet::t_power(3, -1));
  CHECK_THROWS_AS(parse_alphabet("Z", ctx), ParseError);
  CHECK_THROWS_AS(parse_alphabet("X +", ctx), ParseError);
  CHECK_THROWS_AS(parse_alphabet("(X", ctx), ParseError);
}

TEST_CASE("determinant by subsets") {
  const XPoly a = XPoly::variable(1, 0);
  const XPoly one = XPoly::constant(1, 1);
  CHECK(determinant({}, 1) == one);
  CHECK(determinant({{a, one}, {one, a}}, 1) == a * a - one);
  CHECK(determinant({{one, one, one}, {a, a, a}, {one, a, a * a}}, 1).is_zero());
}
