#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hlkit/laurent_poly.hpp"
#include "hlkit/partition.hpp"

namespace hlkit {

enum class Basis { S, QPrime, Q, P };

/// "S", "Qp", "Q", "P" (the JSON labels).
std::string basis_label(Basis b);
/// Inverse of basis_label; also accepts "Q'".
Basis parse_basis(std::string_view label);

/// Finite linear combination sum_λ c_λ B_λ of one family of symmetric
/// functions with Laurent-polynomial coefficients. Zero coefficients are
/// never stored.
class BasisExpansion {
 public:
  explicit BasisExpansion(Basis basis = Basis::S) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const std::map<Partition, LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentPoly coeff(const Partition& p) const;

  void add(const Partition& p, const LaurentPoly& c);
  BasisExpansion& operator+=(const BasisExpansion& o);
  BasisExpansion& operator-=(const BasisExpansion& o);
  BasisExpansion& operator*=(const LaurentPoly& c);
  friend BasisExpansion operator+(BasisExpansion a, const BasisExpansion& b) { return a += b; }
  friend BasisExpansion operator-(BasisExpansion a, const BasisExpansion& b) { return a -= b; }
  friend BasisExpansion operator*(BasisExpansion a, const LaurentPoly& c) { return a *= c; }
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;

  /// "S[2,1] + t*S[3]", "Q'[1,1] + (1+t)*Q'[2]"; "0" when empty.
  std::string to_string() const;

 private:
  Basis basis_;
  std::map<Partition, LaurentPoly> coeffs_;
};

}  // namespace hlkit
