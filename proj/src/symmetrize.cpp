#include "hlkit/symmetrize.hpp"

#include <algorithm>
#include <numeric>

#include "hlkit/errors.hpp"

namespace hlkit {

namespace {

struct SignedPermutation {
  std::vector<std::size_t> image;
  int sign;
};

std::vector<SignedPermutation> all_permutations(std::size_t n) {
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (p[a] > p[b]) ++inversions;
    out.push_back({p, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_index(const XPoly& f, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= f.nvars())
    throw IndexOutOfRange("simple transposition index " + std::to_string(i) + " out of range for " +
                          std::to_string(f.nvars()) + " variables");
}

IntVector staircase(std::size_t n) {
  IntVector rho(n);
  for (std::size_t k = 0; k < n; ++k) rho[k] = static_cast<int>(n - 1 - k);
  return rho;
}

}  // namespace

XPoly swap_si(const XPoly& f, int i) {
  check_index(f, i);
  const auto a = static_cast<std::size_t>(i - 1);
  return f.map_exponents([a](const Exponent& e) {
    Exponent s = e;
    std::swap(s[a], s[a + 1]);
    return s;
  });
}

XPoly pi_i(const XPoly& f, int i) {
  check_index(f, i);
  const auto a = static_cast<std::size_t>(i - 1);
  XPoly num = XPoly::variable(f.nvars(), a) * f - XPoly::variable(f.nvars(), a + 1) * swap_si(f, i);
  return divide_by_difference(num, a, a + 1);
}

std::vector<int> longest_reduced_word(std::size_t n) {
  std::vector<int> word;
  for (int k = 1; k < static_cast<int>(n); ++k)
    for (int j = k; j >= 1; --j) word.push_back(j);
  return word;
}

XPoly pi_omega(const XPoly& f) {
  XPoly g = f;
  for (int i : longest_reduced_word(f.nvars())) g = pi_i(g, i);
  return g;
}

XPoly pi_omega_by_sum(const XPoly& f) {
  const std::size_t n = f.nvars();
  const XPoly shifted = f * XPoly::monomial(staircase(n));
  XPoly alt(n);
  for (const auto& sp : all_permutations(n)) {
    const LaurentPoly sign(sp.sign);
    for (const auto& [e, c] : shifted.terms()) {
      Exponent moved(n);
      for (std::size_t k = 0; k < n; ++k) moved[sp.image[k]] = e[k];
      alt.add_term(moved, sign * c);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) alt = divide_by_difference(alt, i, j);
  return alt;
}

XPoly truncate_nonneg(const XPoly& f) {
  return f.filtered([](const Exponent& e) { return zvec_nonneg(e); });
}

namespace {

BasisExpansion read_schur(const XPoly& f, bool drop_negative) {
  const std::size_t n = f.nvars();
  const IntVector rho = staircase(n);
  std::map<Exponent, LaurentPoly> alt;
  Exponent key(n);
  for (const auto& sp : all_permutations(n)) {
    for (const auto& [e, c] : f.terms()) {
      bool decreasing = true;
      for (std::size_t k = 0; k < n; ++k) {
        key[k] = e[k] + rho[sp.image[k]];
        if (k > 0 && key[k] >= key[k - 1]) {
          decreasing = false;
          break;
        }
      }
      if (!decreasing) continue;
      auto& slot = alt[key];
      if (sp.sign > 0)
        slot += c;
      else
        slot -= c;
    }
  }
  BasisExpansion out(Basis::S);
  for (const auto& [k, c] : alt) {
    if (c.is_zero()) continue;
    IntVector lambda(n);
    for (std::size_t i = 0; i < n; ++i) lambda[i] = k[i] - rho[i];
    if (n > 0 && lambda[n - 1] < 0) {
      if (drop_negative) continue;
      throw PreconditionViolation("schur_coefficients: input is not a symmetric polynomial");
    }
    out.add(Partition(lambda), c);
  }
  return out;
}

}  // namespace

BasisExpansion schur_coefficients(const XPoly& f) { return read_schur(f, false); }

BasisExpansion cup(const XPoly& f) { return read_schur(pi_omega(truncate_nonneg(f)), true); }

int kernel_order_bound(const IntVector& u) {
  int best = 0, suffix = 0;
  for (std::size_t k = u.size(); k-- > 1;) {
    suffix += u[k];
    best = std::max(best, suffix);
  }
  return best;
}

XPoly kernel_expansion(const IntVector& u, std::optional<int> order) {
  const std::size_t n = u.size();
  const int K = order.value_or(kernel_order_bound(u));
  XPoly acc(n);
  if (!zvec_nonneg(u)) return acc;
  acc.add_term(u, 1);
  for (std::size_t j = n; j-- > 1;) {
    for (std::size_t i = 0; i < j; ++i) {
      XPoly next(n);
      for (const auto& [e, c] : acc.terms()) {
        int suffix = 0;
        for (std::size_t m = j; m < n; ++m) suffix += e[m];
        Exponent moved = e;
        for (int k = 0; k <= std::min(K, suffix); ++k) {
          next.add_term(moved, c.shifted(k));
          ++moved[i];
          --moved[j];
        }
      }
      acc = std::move(next);
    }
  }
  return truncate_nonneg(acc);
}

BasisExpansion cup_kernel(const IntVector& u, std::optional<int> order) {
  return read_schur(pi_omega(kernel_expansion(u, order)), true);
}

XPoly defq_image(const IntVector& v) {
  const std::size_t n = v.size();
  XPoly f = XPoly::monomial(v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Exponent ratio(n, 0);
      ratio[j] = 1;
      ratio[i] = -1;
      f = f * (XPoly::constant(n, 1) - XPoly::monomial(ratio, LaurentPoly::t()));
    }
  return pi_omega(f);
}

XPoly defq_operator(const IntVector& lambda) {
  if (!is_partition(lambda))
    throw NotAPartition("defq_operator: weight is not dominant");
  const std::size_t n = lambda.size();
  const int m0 = static_cast<int>(std::count(lambda.begin(), lambda.end(), 0));
  XPoly image = defq_image(lambda) * LaurentPoly(1 - LaurentPoly::t()).pow(static_cast<unsigned>(n));
  return image.exact_div_coeffs(t_pochhammer_range(1, m0));
}

XPoly defq_operator(const Partition& lambda, std::size_t n) { return defq_operator(lambda.padded(n)); }

}  // namespace hlkit
