#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hlkit/laurent_poly.hpp"

namespace hlkit {

/// Signed exponent vector; negative entries give Laurent monomials.
using Exponent = std::vector<int>;

/// Sparse Laurent polynomial in a fixed number of variables with LaurentPoly
/// coefficients. Terms are kept in lexicographic order of exponents, which
/// fixes the serialization order. Mixing polynomials over different variable
/// counts throws std::invalid_argument.
class XPoly {
 public:
  using TermMap = std::map<Exponent, LaurentPoly>;

  explicit XPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static XPoly constant(std::size_t nvars, const LaurentPoly& c);
  static XPoly monomial(Exponent e, const LaurentPoly& c = 1);
  /// The single variable x_{index} (0-based).
  static XPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const Exponent& e) const;
  /// The coefficient of x^0; for a polynomial in zero variables this is its value.
  LaurentPoly constant_term() const { return coeff(Exponent(nvars_, 0)); }

  /// Adds c * x^e.
  void add_term(const Exponent& e, const LaurentPoly& c);

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const LaurentPoly& c);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const LaurentPoly& c) { return a *= c; }
  friend XPoly operator*(const LaurentPoly& c, XPoly a) { return a *= c; }
  friend bool operator==(const XPoly& a, const XPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

  /// Product keeping only terms whose weighted degree sum_i w_i e_i <= cap.
  XPoly mul_truncated(const XPoly& o, std::span<const int> weights, int cap) const;
  XPoly truncated(std::span<const int> weights, int cap) const;
  XPoly pow(unsigned k) const;
  /// Keeps the terms satisfying pred.
  XPoly filtered(const std::function<bool(const Exponent&)>& pred) const;
  /// Applies f to every exponent (terms landing on the same exponent add up).
  XPoly map_exponents(const std::function<Exponent(const Exponent&)>& f) const;
  /// Divides every coefficient exactly by d (NotDivisible otherwise).
  XPoly exact_div_coeffs(const LaurentPoly& d) const;
  XPoly divided_by(const Integer& d) const;
  /// Reinterprets this polynomial in a space of new_nvars variables, variable i
  /// becoming variable positions[i].
  XPoly embed(std::size_t new_nvars, std::span<const std::size_t> positions) const;
  int total_degree_max() const;
  int total_degree_min() const;

  /// "(1-t)*x1^2*x2 + x3"; variable names default to x1..xn.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_same(const XPoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Exact quotient a / d where d = c * (x_i - x_j) for some i != j and integer
/// unit c = +-1. Throws NotDivisible when the remainder is nonzero and
/// std::invalid_argument when d is not of that shape.
XPoly xp_exact_div_linear(const XPoly& a, const XPoly& d);
/// a / (x_i - x_j), by synthetic division along the x_i/x_j direction.
XPoly divide_by_difference(const XPoly& a, std::size_t i, std::size_t j);

/// Default names x1..xn.
std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x");

}  // namespace hlkit
