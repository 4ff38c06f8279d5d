#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hlkit {

using Integer = mpz_class;

/// Laurent polynomial in t with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest to the highest nonzero power. The
/// representation is canonical: the first and last stored coefficients are
/// nonzero, and the zero polynomial stores nothing, so structural equality is
/// mathematical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): integers embed.
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  /// c * t^e
  static LaurentPoly monomial(const Integer& c, int e);
  /// t^e
  static LaurentPoly t(int e = 1) { return monomial(1, e); }
  static LaurentPoly from_terms(const std::map<int, Integer>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Lowest / highest power with a nonzero coefficient. Undefined for zero.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int e) const;
  std::map<int, Integer> terms() const;

  template <typename F>
  void for_each_term(F&& f) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) f(low_ + static_cast<int>(k), coeffs_[k]);
  }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// this * t^k
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned k) const;
  /// Divides every coefficient by d; throws NotDivisible unless exact.
  LaurentPoly divided_by(const Integer& d) const;
  /// Value at t = v. Requires low_degree() >= 0 unless zero.
  Integer evaluate(const Integer& v) const;

  /// "t^-1 + 2 + t^3"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Same grammar without blanks: "1-t^2".
  std::string to_compact_string() const;
  /// Accepts both renderings above (and blanks anywhere).
  static LaurentPoly parse(std::string_view text);

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// q with a == q * b. Throws NotDivisible when the remainder is nonzero and
/// std::domain_error when b is zero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Product (1 - t^from)(1 - t^{from+1})...(1 - t^to); 1 when from > to.
LaurentPoly t_pochhammer_range(int from, int to);

}  // namespace hlkit
