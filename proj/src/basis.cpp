#include "hlkit/basis.hpp"

#include <stdexcept>

#include "hlkit/errors.hpp"

namespace hlkit {

std::string basis_label(Basis b) {
  switch (b) {
    case Basis::S: return "S";
    case Basis::QPrime: return "Qp";
    case Basis::Q: return "Q";
    case Basis::P: return "P";
  }
  return "?";
}

Basis parse_basis(std::string_view label) {
  if (label == "S") return Basis::S;
  if (label == "Qp" || label == "Q'") return Basis::QPrime;
  if (label == "Q") return Basis::Q;
  if (label == "P") return Basis::P;
  throw ParseError("unknown basis '" + std::string(label) + "'");
}

LaurentPoly BasisExpansion::coeff(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

void BasisExpansion::add(const Partition& p, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

BasisExpansion& BasisExpansion::operator+=(const BasisExpansion& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("BasisExpansion: adding different bases");
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

BasisExpansion& BasisExpansion::operator-=(const BasisExpansion& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("BasisExpansion: subtracting different bases");
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

BasisExpansion& BasisExpansion::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

std::string BasisExpansion::to_string() const {
  if (coeffs_.empty()) return "0";
  const std::string symbol = basis_ == Basis::QPrime ? "Q'" : basis_label(basis_);
  std::string out;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    const bool negative = c.is_monomial() && c.coeff(c.low_degree()) < 0;
    const LaurentPoly mag = negative ? -c : c;
    std::string coeff = mag.to_compact_string();
    std::string term = symbol + p.to_string();
    if (coeff != "1") term = (mag.is_monomial() ? coeff : "(" + coeff + ")") + "*" + term;
    if (first)
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace hlkit
