#include "hlkit/hall_littlewood.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "hlkit/errors.hpp"
#include "hlkit/symmetrize.hpp"
#include "hlkit/tableaux.hpp"

namespace hlkit {

namespace {

template <typename Key>
class Memo {
 public:
  template <typename F>
  const BasisExpansion& get(const Key& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    BasisExpansion value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, BasisExpansion> table_;
};

Memo<Partition>& qprime_schur_memo() {
  static Memo<Partition> memo;
  return memo;
}

Memo<IntVector>& qprime_indexed_memo() {
  static Memo<IntVector> memo;
  return memo;
}

/// Rewrites sum c_ν S_ν as sum d_μ Q'_μ. Q'_μ = S_μ + (terms S_ρ, ρ > μ in
/// lexicographic order), so the smallest remaining index is always final.
template <typename C>
std::map<Partition, C> back_substitute(std::map<Partition, C> rest) {
  std::map<Partition, C> out;
  while (!rest.empty()) {
    auto first = rest.begin();
    const Partition mu = first->first;
    const C c = first->second;
    rest.erase(first);
    if (c.is_zero()) continue;
    for (const auto& [rho, k] : qprime_schur(mu).coeffs()) {
      if (rho == mu) continue;
      auto it = rest.find(rho);
      if (it == rest.end()) {
        rest.emplace(rho, -(c * k));
      } else {
        it->second -= c * k;
        if (it->second.is_zero()) rest.erase(it);
      }
    }
    out.emplace(mu, c);
  }
  return out;
}

}  // namespace

const BasisExpansion& qprime_schur(const Partition& mu) {
  return qprime_schur_memo().get(mu, [&] {
    BasisExpansion e(Basis::S);
    for (const Tableau& t : enumerate_ssyt_by_weight(mu.parts())) e.add(t.shape(), LaurentPoly::t(charge_tableau(t)));
    return e;
  });
}

const BasisExpansion& qprime_indexed(const IntVector& u) {
  return qprime_indexed_memo().get(u, [&] { return convert_basis(cup_kernel(u), Basis::QPrime); });
}

BasisExpansion convert_basis(const BasisExpansion& e, Basis target) {
  const Basis from = e.basis();
  if (from == target) return e;
  BasisExpansion out(target);
  if (from == Basis::S && target == Basis::QPrime) {
    for (const auto& [mu, c] : back_substitute(e.coeffs())) out.add(mu, c);
  } else if (from == Basis::QPrime && target == Basis::S) {
    for (const auto& [mu, c] : e.coeffs()) out += qprime_schur(mu) * c;
  } else if (from == Basis::Q && target == Basis::P) {
    for (const auto& [mu, c] : e.coeffs()) out.add(mu, c * b_poly(mu));
  } else if (from == Basis::P && target == Basis::Q) {
    for (const auto& [mu, c] : e.coeffs()) out.add(mu, exact_div(c, b_poly(mu)));
  } else {
    throw std::invalid_argument("convert_basis: no conversion from " + basis_label(from) + " to " +
                                basis_label(target));
  }
  return out;
}

std::map<Partition, XPoly> schur_to_qprime(const std::map<Partition, XPoly>& s) { return back_substitute(s); }

XPoly qprime_eval(const Partition& lambda, const Alphabet& a) {
  XPoly out(a.nvars());
  for (const auto& [rho, k] : qprime_schur(lambda).coeffs()) out += schur_eval(rho, a) * k;
  return out;
}

XPoly hl_Q(const Partition& lambda, const Alphabet& a) { return qprime_eval(lambda, a.times_one_minus_t()); }

XPoly hl_P(const Partition& lambda, const Alphabet& a) { return hl_Q(lambda, a).exact_div_coeffs(b_poly(lambda)); }

XPoly evaluate(const BasisExpansion& e, const Alphabet& a) {
  XPoly out(a.nvars());
  for (const auto& [mu, c] : e.coeffs()) {
    switch (e.basis()) {
      case Basis::S: out += schur_eval(mu, a) * c; break;
      case Basis::QPrime: out += qprime_eval(mu, a) * c; break;
      case Basis::Q: out += hl_Q(mu, a) * c; break;
      case Basis::P: out += hl_P(mu, a) * c; break;
    }
  }
  return out;
}

LaurentPoly aleph(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return {};
  const Partition lc = conjugate(lambda);
  LaurentPoly num = LaurentPoly::t(n_skew(lambda, mu));
  for (std::size_t i = 1; i <= mu.length(); ++i) {
    const int nu = lc.part(static_cast<std::size_t>(mu.part(i)));
    num *= 1 - LaurentPoly::t(nu - static_cast<int>(i) + 1);
  }
  return exact_div(num, b_poly(mu));
}

LaurentPoly aleph_column_rule(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return {};
  const Partition lc = conjugate(lambda), mc = conjugate(mu);
  LaurentPoly v(1);
  for (int c = 1; c <= lambda.part(1); ++c) {
    const int alpha = mu.multiplicity(c);
    const int beta = lc.part(static_cast<std::size_t>(c)) - mc.part(static_cast<std::size_t>(c));
    v *= t_binomial(alpha + beta, alpha).shifted(beta * (beta - 1) / 2);
  }
  return v;
}

BasisExpansion add_one(const Partition& lambda) {
  BasisExpansion e(Basis::QPrime);
  for (const Partition& mu : subpartitions(lambda)) e.add(mu, aleph(lambda, mu));
  return e;
}

BasisExpansion sub_one(const Partition& lambda) {
  BasisExpansion e(Basis::QPrime);
  const int top = lambda.part(1);
  std::vector<int> drop(static_cast<std::size_t>(top) + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > top) {
      LaurentPoly c(1);
      std::vector<int> all;
      for (int k = top; k >= 1; --k) {
        const int m = lambda.multiplicity(k), a = drop[static_cast<std::size_t>(k)];
        c *= t_binomial(m, a) * LaurentPoly(a % 2 ? -1 : 1);
        all.insert(all.end(), static_cast<std::size_t>(m - a), k);
        if (k < top) all.insert(all.end(), static_cast<std::size_t>(drop[static_cast<std::size_t>(k + 1)]), k);
      }
      e.add(Partition(all), c);
      return;
    }
    for (int a = 0; a <= lambda.multiplicity(i); ++a) {
      drop[static_cast<std::size_t>(i)] = a;
      rec(i + 1);
    }
  };
  rec(1);
  return e;
}

std::map<Partition, XPoly> skew_qprime_all(const Partition& lambda, const Alphabet& a) {
  std::map<Partition, XPoly> schur_part;
  for (const auto& [rho, k] : qprime_schur(lambda).coeffs()) {
    for (const Partition& nu : subpartitions(rho)) {
      XPoly v = skew_schur_eval(rho, nu, a) * k;
      if (v.is_zero()) continue;
      auto [it, inserted] = schur_part.try_emplace(nu, a.nvars());
      it->second += v;
    }
  }
  return schur_to_qprime(schur_part);
}

XPoly skew_qprime(const Partition& lambda, const Partition& mu, const Alphabet& a) {
  auto all = skew_qprime_all(lambda, a);
  auto it = all.find(mu);
  return it == all.end() ? XPoly(a.nvars()) : it->second;
}

XPoly plane_partition_qprime(const Partition& lambda, std::size_t n) {
  XPoly out(n);
  for (const auto& pp : enumerate_plane_partitions(lambda, static_cast<int>(n))) out += aleph_weight(pp, n);
  return out;
}

RectangleSplit split_rectangle(const Partition& lambda, int n) {
  if (n < 1) throw PreconditionViolation("split_rectangle: n must be positive");
  RectangleSplit s;
  std::vector<int> nu, zeta;
  for (int p : lambda.parts()) {
    if (p >= n) {
      ++s.k;
      nu.push_back(p - n);
    } else {
      zeta.push_back(p);
    }
  }
  s.nu = Partition(nu);
  s.zeta = Partition(zeta);
  return s;
}

std::pair<XPoly, XPoly> one_minus_X_sides(const Partition& lambda, int r, std::size_t n) {
  const Alphabet x = Alphabet::variables(n, 0, n);
  const XPoly lhs = qprime_eval(lambda, Alphabet::t_power(n, r) - x);
  const RectangleSplit s = split_rectangle(lambda, static_cast<int>(n));
  XPoly rhs = XPoly::constant(n, LaurentPoly::t(n_stat(s.nu) + r * s.nu.size()));
  for (int i = r; i <= s.k + r - 1; ++i) rhs = rhs * resultant(Letter{i, Exponent(n, 0)}, x);
  rhs = rhs * qprime_eval(s.zeta, Alphabet::t_power(n, s.k + r) - x);
  return {lhs, rhs};
}

bool one_minus_X_factorization_check(const Partition& lambda, int r, std::size_t n) {
  auto [lhs, rhs] = one_minus_X_sides(lambda, r, n);
  return lhs == rhs;
}

XPoly principal_specialization(const Partition& lambda, const Letter& x) {
  const std::size_t n = x.exponent.size();
  XPoly out = XPoly::constant(n, LaurentPoly::t(n_stat(lambda)));
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    Letter shifted{x.tpow - static_cast<int>(i), x.exponent};
    out = out * (XPoly::constant(n, 1) - shifted.as_poly());
  }
  return out;
}

bool principal_specialization_check(const Partition& lambda, const Letter& x) {
  const std::size_t n = x.exponent.size();
  const Alphabet one_minus_x = Alphabet::t_power(n, 0) - Alphabet(n, {x}, {});
  return qprime_eval(lambda, one_minus_x) == principal_specialization(lambda, x);
}

std::pair<XPoly, XPoly> two_letter_factorization_sides(int k, const Partition& nu, int beta) {
  if (k < 0 || beta < 0) throw PreconditionViolation("two-letter factorization: k and β must be nonnegative");
  if (nu.length() > static_cast<std::size_t>(k)) throw PreconditionViolation("two-letter factorization: ℓ(ν) > k");
  constexpr std::size_t n = 2;
  std::vector<int> parts;
  for (int i = 1; i <= k; ++i) parts.push_back(2 + nu.part(static_cast<std::size_t>(i)));
  parts.insert(parts.end(), static_cast<std::size_t>(beta), 1);
  const Alphabet x = Alphabet::variables(n, 0, n);
  const XPoly lhs = qprime_eval(Partition(parts), Alphabet::t_power(n, 0) - x);

  // (t;t)_β e_β(A/(1-t)) = sum_{ρ ⊢ β} ε_ρ z_ρ^{-1} [(t;t)_β / prod_i (1 - t^{ρ_i})] prod_i p_{ρ_i}(A),
  // scaled by β! so every coefficient stays integral.
  const Alphabet a = Alphabet::t_power(n, k) - x;
  Integer factorial = 1;
  for (int i = 2; i <= beta; ++i) factorial *= i;
  const LaurentPoly poch = t_pochhammer_range(1, beta);
  XPoly bracket(n);
  for (const Partition& rho : partitions_of(beta)) {
    Integer z = 1;
    LaurentPoly denom(1);
    XPoly prod = XPoly::constant(n, 1);
    for (int part = 1; part <= beta; ++part) {
      const int m = rho.multiplicity(part);
      for (int j = 1; j <= m; ++j) z *= part * j;
    }
    for (int part : rho.parts()) {
      denom *= 1 - LaurentPoly::t(part);
      prod = prod * a.power_sum(part);
    }
    const int sign = (beta - static_cast<int>(rho.length())) % 2 ? -1 : 1;
    const Integer weight = factorial / z;
    bracket += prod * (exact_div(poch, denom) * LaurentPoly(Integer(weight * sign)));
  }
  bracket = bracket.divided_by(factorial);

  XPoly rhs = bracket * LaurentPoly::t(n_stat(nu));
  for (int i = 0; i < k; ++i) rhs = rhs * resultant(Letter{i, Exponent(n, 0)}, x);
  return {lhs, rhs};
}

bool two_letter_factorization_check(int k, const Partition& nu, int beta) {
  auto [lhs, rhs] = two_letter_factorization_sides(k, nu, beta);
  return lhs == rhs;
}

}  // namespace hlkit
