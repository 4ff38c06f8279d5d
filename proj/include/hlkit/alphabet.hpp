#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlkit/partition.hpp"
#include "hlkit/xpoly.hpp"

namespace hlkit {

/// Monomial letter t^tpow * x^exponent over a fixed variable layout.
struct Letter {
  int tpow = 0;
  Exponent exponent;

  XPoly as_poly() const { return XPoly::monomial(exponent, LaurentPoly::t(tpow)); }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Formal difference of two finite multisets of letters, acted on through
/// power sums: p_k(A) = sum_{a in plus} a^k - sum_{b in minus} b^k.
class Alphabet {
 public:
  explicit Alphabet(std::size_t nvars = 0) : nvars_(nvars) {}
  Alphabet(std::size_t nvars, std::vector<Letter> plus, std::vector<Letter> minus);

  /// The single letter t^tpow * x^e.
  static Alphabet letter(std::size_t nvars, int tpow, Exponent e);
  /// t^r as a one-letter alphabet; r = 0 gives the alphabet 1.
  static Alphabet t_power(std::size_t nvars, int r);
  /// {x_first, ..., x_{first+count-1}} (0-based indices).
  static Alphabet variables(std::size_t nvars, std::size_t first, std::size_t count);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Letter>& plus() const { return plus_; }
  const std::vector<Letter>& minus() const { return minus_; }
  bool is_positive() const { return minus_.empty(); }

  Alphabet operator-() const { return Alphabet(nvars_, minus_, plus_); }
  friend Alphabet operator+(const Alphabet& a, const Alphabet& b);
  friend Alphabet operator-(const Alphabet& a, const Alphabet& b) { return a + (-b); }
  /// Letterwise product: p_k(AB) = p_k(A) p_k(B).
  friend Alphabet operator*(const Alphabet& a, const Alphabet& b);
  /// A(1-t): every letter a becomes a plus-minus pair {a} - {t a}.
  Alphabet times_one_minus_t() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

  /// h_0 .. h_D; h'_k = h_k + a h'_{k-1} for a plus letter a and
  /// h'_k = h_k - b h_{k-1} for a minus letter b.
  std::vector<XPoly> complete(int D) const;
  /// e_k(A) = (-1)^k h_k(-A), k = 0..D.
  std::vector<XPoly> elementary(int D) const;
  XPoly power_sum(int k) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void normalize();
  std::size_t nvars_;
  std::vector<Letter> plus_, minus_;
};

/// Names and bound alphabets for parse_alphabet.
struct AlphabetContext {
  std::vector<std::string> var_names;
  std::map<std::string, Alphabet> bindings;

  /// Variables x1..x{nx}, y1..y{ny}; X and Y bound to the sums.
  static AlphabetContext standard(std::size_t nx, std::size_t ny = 0);
  std::size_t nvars() const { return var_names.size(); }
};

/// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := '-' factor | '(' expr ')' | N | t | t^k | variable | bound name.
/// An integer N stands for N copies of the letter 1.
Alphabet parse_alphabet(std::string_view text, const AlphabetContext& ctx);

/// det(M) for a square matrix of polynomials, expanding over column subsets.
XPoly determinant(const std::vector<std::vector<XPoly>>& m, std::size_t nvars);

/// S_λ(A) by Jacobi-Trudi; the dual e-form is used when λ has more rows
/// than columns.
XPoly schur_eval(const Partition& lambda, const Alphabet& a);
/// S_{λ/μ}(A) = det(h_{λ_i - μ_j - i + j}(A)); zero unless μ ⊆ λ.
XPoly skew_schur_eval(const Partition& lambda, const Partition& mu, const Alphabet& a);

/// R(y, X) = prod_{x in X}(y - x). X must have no minus letters.
XPoly resultant(const Letter& y, const Alphabet& x);

/// Both sides of S_{β^α+ν, ζ}(A-B) = S_ζ(-B) S_ν(A) R(A, B), with
/// α = |A|, β = |B|, R(A,B) = prod (a-b). Requires positive A, B,
/// ℓ(ν) <= α and ζ_1 <= β (PreconditionViolation otherwise).
std::pair<XPoly, XPoly> berele_regev_sides(const Partition& nu, const Partition& zeta, const Alphabet& a,
                                           const Alphabet& b);
bool berele_regev_check(const Partition& nu, const Partition& zeta, const Alphabet& a, const Alphabet& b);
/// S_ν(A-B) = 0 whenever ν contains the rectangle (β+1)^{α+1}.
bool berele_regev_vanishing_check(const Partition& nu, const Alphabet& a, const Alphabet& b);

}  // namespace hlkit
