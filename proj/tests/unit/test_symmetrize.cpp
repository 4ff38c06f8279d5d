#include <doctest.h>

#include <random>

#include "hlkit/alphabet.hpp"
#include "hlkit/errors.hpp"
#include "hlkit/hall_littlewood.hpp"
#include "hlkit/symmetrize.hpp"
#include "oracles.hpp"

using namespace hlkit;

namespace {

const LaurentPoly t = LaurentPoly::t();

XPoly mono(Exponent e) { return XPoly::monomial(std::move(e)); }

/// Schur polynomial in n variables, summed over tableaux.
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

TEST_CASE("simple transpositions") {
  CHECK(swap_si(mono({2, 1}), 1) == mono({1, 2}));
  const XPoly sym = mono({1, 1}) + mono({2, 0}) + mono({0, 2});
  CHECK(swap_si(sym, 1) == sym);
  CHECK(swap_si(mono({0, 0, 1}), 1) == mono({0, 0, 1}));
  CHECK_THROWS_AS(swap_si(mono({1, 0}), 2), IndexOutOfRange);
  CHECK_THROWS_AS(pi_i(mono({1, 0}), 0), IndexOutOfRange);
}

TEST_CASE("isobaric divided differences") {
  CHECK(pi_i(mono({1, 0}), 1) == mono({1, 0}) + mono({0, 1}));
  CHECK(pi_i(mono({0, 1}), 1).is_zero());
  const XPoly sym = mono({2, 1}) + mono({1, 2});
  CHECK(pi_i(sym, 1) == sym);
  CHECK(pi_i(mono({-1, 0}), 1).is_zero());
  const std::vector<mpq_class> pt = {mpq_class(3), mpq_class(5)};
  const XPoly f = mono({-2, 1}) + t * mono({3, -1});
  const mpq_class lhs = oracle::eval(pi_i(f, 1), pt, 1);
  const mpq_class rhs = (pt[0] * oracle::eval(f, pt, 1) - pt[1] * oracle::eval(swap_si(f, 1), pt, 1)) / (pt[0] - pt[1]);
  CHECK(lhs == rhs);
}

TEST_CASE("divided differences: idempotence and braid relations") {
  std::mt19937 rng(23);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      const XPoly f = oracle::random_xpoly(rng, n, 6 / static_cast<int>(n) + 1, 3);
      for (int i = 1; i < static_cast<int>(n); ++i) {
        const XPoly g = pi_i(f, i);
        CHECK(pi_i(g, i) == g);
        if (i + 1 < static_cast<int>(n)) CHECK(pi_i(pi_i(pi_i(f, i), i + 1), i) == pi_i(pi_i(pi_i(f, i + 1), i), i + 1));
        for (int j = i + 2; j < static_cast<int>(n); ++j) CHECK(pi_i(pi_i(f, i), j) == pi_i(pi_i(f, j), i));
      }
    }
}

TEST_CASE("reduced word of the longest permutation") {
  CHECK(longest_reduced_word(1).empty());
  CHECK(longest_reduced_word(3) == std::vector<int>{1, 2, 1});
  CHECK(longest_reduced_word(4) == std::vector<int>{1, 2, 1, 3, 2, 1});
  for (std::size_t n = 1; n <= 6; ++n) CHECK(longest_reduced_word(n).size() == n * (n - 1) / 2);
}

TEST_CASE("pi_omega on monomials") {
  CHECK(pi_omega(mono({1, 0})) == mono({1, 0}) + mono({0, 1}));
  CHECK(pi_omega(mono({2, 1})) == mono({2, 1}) + mono({1, 2}));
  CHECK(pi_omega(mono({0, 2})) == -mono({1, 1}));
  CHECK(pi_omega(XPoly::constant(3, 7)) == XPoly::constant(3, 7));
}

TEST_CASE("pi_omega of a dominant monomial is the tableau Schur polynomial") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Partition& lam : partitions_up_to(5, n)) CHECK(pi_omega(mono(lam.padded(n))) == schur_by_tableaux(lam, n));
}

TEST_CASE("pi_omega agrees with the straightening rule") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const IntVector& v : oracle::box(n, -3, 3)) {
      const auto s = oracle::straighten_laurent(v);
      const XPoly got = pi_omega(mono(v));
      if (!s) {
        CHECK(got.is_zero());
      } else {
        CHECK(got == pi_omega(mono(s->second)) * LaurentPoly(s->first));
      }
    }
}

TEST_CASE("cup of a monomial is the straightened Schur function") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const IntVector& v : oracle::box(n, -3, 3)) {
      const auto s = oracle::straighten(v);
      BasisExpansion expected(Basis::S);
      if (s) expected.add(Partition(s->second), s->first);
      CHECK(cup(mono(v)) == expected);
    }
}

TEST_CASE("both symmetrizers agree") {
  std::mt19937 rng(29);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const XPoly f = oracle::random_xpoly(rng, n, 3, 3, -1);
      CHECK(pi_omega(f) == pi_omega_by_sum(f));
    }
}

TEST_CASE("truncation") {
  CHECK(truncate_nonneg(mono({-3, 2, 1, 1})) == mono({-3, 2, 1, 1}));
  CHECK(truncate_nonneg(mono({3, -1})).is_zero());
  const XPoly f = mono({2, 0}) + mono({0, 3}) + t * mono({1, 1});
  CHECK(truncate_nonneg(f) == f);
}

TEST_CASE("dropped monomials have zero image") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const IntVector& v : oracle::box(n, -4, 4))
      if (!zvec_nonneg(v)) CHECK_FALSE(oracle::straighten(v).has_value());
}

TEST_CASE("cup of kernel products") {
  const BasisExpansion q21 = cup_kernel({2, 1});
  BasisExpansion expected(Basis::S);
  expected.add({2, 1}, 1);
  expected.add({3}, t);
  CHECK(q21 == expected);
  BasisExpansion one(Basis::S);
  one.add({}, 1);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(cup_kernel(IntVector(n, 0)) == one);
  // Q'_{02} = t Q'_{20} + (t - 1) Q'_{11} read in Schur functions
  const BasisExpansion rhs = qprime_schur({2}) * t + qprime_schur({1, 1}) * (t - 1);
  CHECK(cup_kernel({0, 2}) == rhs);
}

TEST_CASE("cup of a symmetric input is its Schur expansion") {
  CHECK(cup(mono({2, 1})).coeff({2, 1}) == LaurentPoly(1));
  CHECK(cup(mono({3, -1})).is_zero());
}

TEST_CASE("kernel order bound is stable") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const IntVector& u : oracle::box(n, -1, 3)) {
      const int K = kernel_order_bound(u);
      CHECK(cup_kernel(u, K) == cup_kernel(u, K + 1));
      CHECK(cup_kernel(u, K) == cup_kernel(u, K + 3));
    }
}

TEST_CASE("schur reading rejects Laurent input") {
  CHECK_THROWS_AS(schur_coefficients(mono({0, -1}) + mono({-1, 0})), PreconditionViolation);
}

TEST_CASE("defq on dominant weights gives Q") {
  const XPoly x1 = XPoly::variable(1, 0);
  CHECK(defq_operator(Partition({1}), 1) == (1 - t) * x1);
  CHECK(defq_operator(Partition(), 2) == XPoly::constant(2, 1));
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Partition& lam : partitions_up_to(4, n))
      CHECK(defq_operator(lam, n) == hl_Q(lam, Alphabet::variables(n, 0, n)));
  CHECK_THROWS_AS(defq_operator(IntVector{0, 2}), NotAPartition);
}
