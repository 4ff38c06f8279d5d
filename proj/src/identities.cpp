#include "hlkit/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hlkit/errors.hpp"
#include "hlkit/hall_littlewood.hpp"
#include "hlkit/symmetrize.hpp"

namespace hlkit {

namespace {

int weighted_degree(const Exponent& e, const std::vector<int>& w) {
  int d = 0;
  for (std::size_t k = 0; k < e.size(); ++k) d += w[k] * e[k];
  return d;
}

/// Every u in N^n with |u| <= max_total.
std::vector<IntVector> bounded_compositions(std::size_t n, int max_total) {
  std::vector<IntVector> out;
  IntVector cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  if (max_total >= 0) rec(0, max_total);
  return out;
}

std::vector<IntVector> zero_one_vectors(std::size_t n) {
  std::vector<IntVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IntVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = (mask >> k) & 1 ? 1 : 0;
    out.push_back(v);
  }
  return out;
}

std::vector<int> block_weights(std::size_t nvars, std::size_t first, std::size_t count) {
  std::vector<int> w(nvars, 0);
  for (std::size_t k = first; k < first + count; ++k) w[k] = 1;
  return w;
}

std::vector<std::string> xy_names(std::size_t nx, std::size_t ny) {
  auto names = default_names(nx, "x");
  for (auto& s : default_names(ny, "y")) names.push_back(s);
  return names;
}

XPoly one_minus_each(const Alphabet& x) {
  XPoly p = XPoly::constant(x.nvars(), 1);
  for (const auto& l : x.plus()) p = p * (XPoly::constant(x.nvars(), 1) - l.as_poly());
  return p;
}

IdentityReport make_report(std::string name, XPoly lhs, XPoly rhs, std::vector<std::string> names) {
  IdentityReport r;
  r.identity = std::move(name);
  r.holds = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.names = std::move(names);
  return r;
}

}  // namespace

TruncatedSeries::TruncatedSeries(XPoly value, std::vector<int> weights, int cap)
    : value_(std::move(value)), weights_(std::move(weights)), cap_(cap) {
  if (weights_.size() != value_.nvars()) throw LengthMismatch("TruncatedSeries: one weight per variable");
  value_ = value_.truncated(weights_, cap_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (o.weights_ != weights_) throw std::invalid_argument("TruncatedSeries: different gradings");
  const int cap = std::min(cap_, o.cap_);
  return TruncatedSeries(value_.mul_truncated(o.value_, weights_, cap), weights_, cap);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (o.weights_ != weights_) throw std::invalid_argument("TruncatedSeries: different gradings");
  return TruncatedSeries(value_ + o.value_, weights_, std::min(cap_, o.cap_));
}

TruncatedSeries sigma1_series(const Alphabet& a, const std::vector<int>& weights, int D) {
  const std::size_t n = a.nvars();
  XPoly acc = XPoly::constant(n, 1);
  for (const auto& l : a.plus()) {
    const int d = weighted_degree(l.exponent, weights);
    if (d <= 0) throw NonTerminating("sigma1_series: letter of degree " + std::to_string(d) + " in a geometric factor");
    XPoly geom = XPoly::constant(n, 1), power = XPoly::constant(n, 1);
    for (int k = 1; k * d <= D; ++k) {
      power = power * l.as_poly();
      geom += power;
    }
    acc = acc.mul_truncated(geom, weights, D);
  }
  for (const auto& l : a.minus()) acc = acc.mul_truncated(XPoly::constant(n, 1) - l.as_poly(), weights, D);
  return TruncatedSeries(acc, weights, D);
}

TruncatedSeries sigma1_series(const Alphabet& a, int D) { return sigma1_series(a, std::vector<int>(a.nvars(), 1), D); }

IdentityReport prodx_report(const std::map<Partition, XPoly>& c, std::size_t n, int D) {
  const std::size_t nv = c.empty() ? n : c.begin()->second.nvars();
  if (nv < n) throw LengthMismatch("prodx: coefficient layout smaller than n");
  const Alphabet x = Alphabet::variables(nv, 0, n);
  const std::vector<int> w = block_weights(nv, 0, n);
  std::map<Partition, XPoly> p_cache;
  auto P = [&](const Partition& mu) -> const XPoly& {
    auto it = p_cache.find(mu);
    if (it == p_cache.end()) it = p_cache.emplace(mu, hl_P(mu, x)).first;
    return it->second;
  };
  auto c_of = [&](const Partition& mu) {
    auto it = c.find(mu);
    return it == c.end() ? XPoly(nv) : it->second;
  };

  XPoly sum(nv);
  for (const auto& [mu, cm] : c)
    if (mu.size() <= D && mu.length() <= n) sum += cm * P(mu);
  const XPoly lhs = (one_minus_each(x) * sum).truncated(w, D);

  XPoly rhs(nv);
  for (const Partition& lambda : partitions_up_to(D, n)) {
    const IntVector lam = lambda.padded(n);
    XPoly coeff(nv);
    for (const IntVector& v : zero_one_vectors(n)) {
      IntVector shifted(n);
      for (std::size_t k = 0; k < n; ++k) shifted[k] = lam[k] - v[k];
      const int sign = std::accumulate(v.begin(), v.end(), 0) % 2 ? -1 : 1;
      for (const auto& [mu, q] : qprime_indexed(shifted).coeffs()) coeff += c_of(mu) * (q * LaurentPoly(sign));
    }
    if (!coeff.is_zero()) rhs += coeff * P(lambda);
  }
  auto names = default_names(n, "x");
  for (auto& s : default_names(nv - n, "y")) names.push_back(s);
  return make_report("prodx", lhs, rhs, names);
}

bool prodx_check(const std::map<Partition, XPoly>& c, std::size_t n, int D) { return prodx_report(c, n, D).holds; }

bool prodx_check(const std::map<Partition, LaurentPoly>& c, std::size_t n, int D) {
  std::map<Partition, XPoly> lifted;
  for (const auto& [mu, v] : c) lifted.emplace(mu, XPoly::constant(n, v));
  if (lifted.empty()) lifted.emplace(Partition{}, XPoly(n));
  return prodx_check(lifted, n, D);
}

IdentityReport sigmaxy_report(std::size_t nx, std::size_t ny, int D) {
  const std::size_t nv = nx + ny;
  const Alphabet x = Alphabet::variables(nv, 0, nx), y = Alphabet::variables(nv, nx, ny);
  const std::vector<int> w = block_weights(nv, 0, nx);
  const XPoly lhs = sigma1_series(x + (x * y).times_one_minus_t(), w, D).value();
  XPoly rhs(nv);
  for (const Partition& lambda : partitions_up_to(D, nx)) {
    XPoly inner(nv);
    for (const Partition& mu : subpartitions(lambda)) {
      if (mu.length() > ny) continue;
      inner += hl_P(mu, y) * (b_poly(mu) * aleph(lambda, mu));
    }
    rhs += hl_P(lambda, x) * inner;
  }
  return make_report("sigmaxy", lhs, rhs, xy_names(nx, ny));
}

bool sigmaxy_check(std::size_t nx, std::size_t ny, int D) { return sigmaxy_report(nx, ny, D).holds; }

std::map<Partition, XPoly> p_expansion(const XPoly& f, std::size_t first, std::size_t count) {
  const std::size_t nv = f.nvars();
  if (first + count > nv) throw IndexOutOfRange("p_expansion: block exceeds the layout");
  const Alphabet block = Alphabet::variables(nv, first, count);
  std::map<Partition, XPoly> out;
  XPoly rest = f;
  while (!rest.is_zero()) {
    IntVector top;
    for (const auto& [e, c] : rest.terms()) {
      IntVector b(e.begin() + static_cast<long>(first), e.begin() + static_cast<long>(first + count));
      if (top.empty() || b > top) top = b;
    }
    if (!is_partition(top)) throw PreconditionViolation("p_expansion: input is not symmetric in the block");
    XPoly coeff(nv);
    for (const auto& [e, c] : rest.terms()) {
      if (!std::equal(top.begin(), top.end(), e.begin() + static_cast<long>(first))) continue;
      Exponent r = e;
      std::fill(r.begin() + static_cast<long>(first), r.begin() + static_cast<long>(first + count), 0);
      coeff.add_term(r, c);
    }
    const Partition lambda(top);
    rest -= coeff * hl_P(lambda, block);
    out.emplace(lambda, coeff);
  }
  return out;
}

BasisExpansion sigmaxy_coefficient(const Partition& lambda, std::size_t nx, std::size_t ny) {
  if (lambda.length() > nx || lambda.length() > ny)
    throw PreconditionViolation("sigmaxy_coefficient: needs at least ℓ(λ) variables on each side");
  const std::size_t nv = nx + ny;
  const Alphabet x = Alphabet::variables(nv, 0, nx), y = Alphabet::variables(nv, nx, ny);
  const XPoly series = sigma1_series(x + (x * y).times_one_minus_t(), block_weights(nv, 0, nx), lambda.size()).value();
  BasisExpansion out(Basis::P);
  const auto in_x = p_expansion(series, 0, nx);
  auto it = in_x.find(lambda);
  if (it == in_x.end()) return out;
  for (const auto& [mu, c] : p_expansion(it->second, nx, ny)) {
    if (c.size() != 1 || c.terms().begin()->first != Exponent(nv, 0))
      throw PreconditionViolation("sigmaxy_coefficient: residual variables in a coefficient");
    out.add(mu, c.constant_term());
  }
  return out;
}

BasisExpansion sigmaxy_coefficient_closed(const Partition& lambda) {
  BasisExpansion out(Basis::P);
  for (const Partition& mu : subpartitions(lambda)) out.add(mu, b_poly(mu) * aleph(lambda, mu));
  return out;
}

LaurentPoly theta(const Partition& lambda, const Partition& mu) {
  return LaurentPoly::t(n_skew(lambda, mu) - mu.size());
}

LaurentPoly theta_conjugate_form(const Partition& lambda, const Partition& mu) {
  return LaurentPoly::t(n_stat(lambda) + n_stat(mu) - conjugate_dot(lambda, mu));
}

IdentityReport warnaar_report(std::size_t nx, std::size_t ny, int D) {
  const std::size_t nv = nx + ny;
  const Alphabet x = Alphabet::variables(nv, 0, nx), y = Alphabet::variables(nv, nx, ny);
  const Alphabet xy = x * y;
  const Alphabet a = x + y + Alphabet::t_power(nv, -1) * xy - xy;
  const XPoly lhs = sigma1_series(a, D).value();
  XPoly rhs(nv);
  for (const Partition& lambda : partitions_up_to(D, nx)) {
    const XPoly pl = hl_P(lambda, x);
    for (const Partition& mu : partitions_up_to(D - lambda.size(), ny)) rhs += pl * hl_P(mu, y) * theta(lambda, mu);
  }
  return make_report("warnaar", lhs, rhs, xy_names(nx, ny));
}

bool warnaar_check(std::size_t nx, std::size_t ny, int D) { return warnaar_report(nx, ny, D).holds; }

IdentityReport warnaar3_report(const Partition& lambda, std::size_t n, int D) {
  if (lambda.length() > n) throw PreconditionViolation("warnaar3: ℓ(λ) > n");
  const Alphabet x = Alphabet::variables(n, 0, n);
  const std::vector<int> w(n, 1);
  XPoly lhs(n);
  for (const Partition& mu : subpartitions(lambda))
    if (mu.length() <= n) lhs += hl_Q(mu, x) * (aleph(lambda, mu).shifted(-mu.size()));
  lhs = lhs.truncated(w, D);
  XPoly sum(n);
  for (const Partition& mu : partitions_up_to(D, n)) sum += hl_P(mu, x) * theta(lambda, mu);
  const XPoly rhs = (one_minus_each(x) * sum).truncated(w, D);
  return make_report("warnaar3", lhs, rhs, default_names(n));
}

bool warnaar3_check(const Partition& lambda, std::size_t n, int D) { return warnaar3_report(lambda, n, D).holds; }

std::map<Partition, LaurentPoly> reduce_monomial(const IntVector& v) { return qprime_indexed(v).coeffs(); }

LaurentPoly dominant_scalar(const std::map<Partition, LaurentPoly>& f, const std::map<Partition, LaurentPoly>& g) {
  LaurentPoly s;
  for (const auto& [lambda, c] : f) {
    auto it = g.find(lambda);
    if (it != g.end()) s += c * it->second * b_poly(lambda);
  }
  return s;
}

LaurentPoly theta_extended(const Partition& lambda, const IntVector& w) {
  LaurentPoly s;
  for (const auto& [rho, c] : reduce_monomial(w)) s += c * theta(lambda, rho);
  return s;
}

LaurentPoly theta_signed_sum(const Partition& lambda, const Partition& mu, std::size_t n) {
  const IntVector m = mu.padded(n);
  LaurentPoly s;
  for (const IntVector& v : zero_one_vectors(n)) {
    IntVector w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = m[k] - v[k];
    const int sign = std::accumulate(v.begin(), v.end(), 0) % 2 ? -1 : 1;
    s += theta_extended(lambda, w) * LaurentPoly(sign);
  }
  return s;
}

LaurentPoly theta_product_form(const Partition& lambda, const Partition& mu) {
  const Partition lc = conjugate(lambda);
  LaurentPoly p = theta(lambda, mu);
  for (std::size_t i = 1; i <= mu.length(); ++i)
    p *= 1 - LaurentPoly::t(lc.part(static_cast<std::size_t>(mu.part(i))) - static_cast<int>(i) + 1);
  return p;
}

IdentityReport theta_scalar_report(const Partition& lambda, const Partition& mu, std::size_t n) {
  const IntVector lam = lambda.padded(n), m = mu.padded(n);
  std::map<Partition, LaurentPoly> left, right;
  auto accumulate_into = [](std::map<Partition, LaurentPoly>& acc, const IntVector& v, const LaurentPoly& c) {
    for (const auto& [rho, q] : reduce_monomial(v)) {
      auto& slot = acc[rho];
      slot += q * c;
    }
  };
  for (const IntVector& u : bounded_compositions(n, lambda.size())) {
    IntVector v(n);
    int total = 0;
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = lam[k] - u[k];
      total += u[k];
    }
    accumulate_into(left, v, LaurentPoly::t(total - lambda.size()));
  }
  for (const IntVector& u : bounded_compositions(n, mu.size())) {
    IntVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = m[k] - u[k];
    accumulate_into(right, v, 1);
  }
  const LaurentPoly pairing = dominant_scalar(left, right);
  const LaurentPoly target = theta(lambda, mu);
  const LaurentPoly intermediate = dominant_scalar(left, {{mu, LaurentPoly(1)}});
  const LaurentPoly signed_sum = theta_signed_sum(lambda, mu, n);
  const LaurentPoly product = theta_product_form(lambda, mu);

  IdentityReport r = make_report("theta-scalar", XPoly::constant(0, pairing), XPoly::constant(0, target), {});
  const bool step = intermediate == signed_sum;
  const bool prod = signed_sum == product;
  r.holds = r.holds && step && prod;
  r.detail = "pairing with x^mu: " + intermediate.to_string() + "; signed theta sum: " + signed_sum.to_string() +
             "; product form: " + product.to_string();
  return r;
}

bool theta_scalar_check(const Partition& lambda, const Partition& mu, std::size_t n) {
  return theta_scalar_report(lambda, mu, n).holds;
}

namespace {

XPoly ct_integrand_finite(const XPoly& f, const XPoly& g) {
  const std::size_t n = f.nvars();
  if (g.nvars() != n) throw LengthMismatch("ct_scalar: f and g over different variable counts");
  const XPoly g_inv = g.map_exponents([n](const Exponent& e) {
    Exponent r(n);
    for (std::size_t k = 0; k < n; ++k) r[n - 1 - k] = -e[k];
    return r;
  });
  XPoly h = f * g_inv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Exponent ratio(n, 0);
      ratio[i] = 1;
      ratio[j] = -1;
      h = h * (XPoly::constant(n, 1) - XPoly::monomial(ratio));
    }
  return h;
}

int prefix_bound(const XPoly& h) {
  int best = 0;
  for (const auto& [e, c] : h.terms()) {
    int prefix = 0;
    for (std::size_t m = 0; m + 1 < e.size(); ++m) {
      prefix += e[m];
      best = std::max(best, -prefix);
    }
  }
  return best;
}

}  // namespace

int ct_kernel_bound(const XPoly& f, const XPoly& g) { return prefix_bound(ct_integrand_finite(f, g)); }

LaurentPoly ct_scalar(const XPoly& f, const XPoly& g, std::optional<int> order) {
  const std::size_t n = f.nvars();
  const XPoly h = ct_integrand_finite(f, g);
  const int K = order.value_or(prefix_bound(h));
  XPoly kernel = XPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      XPoly geom(n);
      Exponent e(n, 0);
      for (int k = 0; k <= K; ++k) {
        e[i] = k;
        e[j] = -k;
        geom.add_term(e, LaurentPoly::t(k));
      }
      kernel = kernel * geom;
    }
  LaurentPoly ct;
  Exponent neg(n);
  for (const auto& [e, c] : h.terms()) {
    for (std::size_t k = 0; k < n; ++k) neg[k] = -e[k];
    ct += c * kernel.coeff(neg);
  }
  return ct;
}

bool proportional(const XPoly& a, const XPoly& b) {
  if (a.nvars() != b.nvars()) return false;
  if (a.is_zero() || b.is_zero()) return true;
  std::vector<Exponent> support;
  for (const auto& [e, c] : a.terms()) support.push_back(e);
  for (const auto& [e, c] : b.terms()) support.push_back(e);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (std::size_t p = 0; p < support.size(); ++p)
    for (std::size_t q = p + 1; q < support.size(); ++q)
      if (a.coeff(support[p]) * b.coeff(support[q]) != a.coeff(support[q]) * b.coeff(support[p])) return false;
  return true;
}

DefqNote defq_counterexample() {
  constexpr std::size_t n = 2;
  const LaurentPoly t = LaurentPoly::t();
  auto mono = [](int a, int b) { return XPoly::monomial({a, b}); };
  DefqNote note;

  const XPoly relation_input = (mono(0, 2) - mono(2, 0) * t + mono(1, 1) * (1 - t)) *
                               (XPoly::constant(n, 1) - XPoly::monomial({-1, 1}, t));
  note.kernel_relation_zero = pi_omega(relation_input).is_zero();

  note.image = defq_image({0, 2});
  note.intermediate_matches = note.image == (mono(2, 0) + mono(1, 1) + mono(0, 2)) * t - mono(1, 1);

  const Alphabet x = Alphabet::variables(n, 0, n);
  note.combination = hl_Q(Partition{2}, x) * t + hl_Q(Partition{1, 1}, x) * (t - 1);
  const XPoly direct = (mono(2, 0) + mono(1, 1) + mono(0, 2)) * (t - t * t) +
                        mono(1, 1) * ((t - 1) * (1 - t + t.pow(3)));
  note.combination_matches = note.combination == direct;

  note.normalized_image = note.image * (1 - t).pow(n);
  note.normalized_image = note.normalized_image.exact_div_coeffs(t_pochhammer_range(1, 1));
  note.image_differs = note.normalized_image != note.combination;
  note.image_not_proportional = !proportional(note.image, note.combination);

  BasisExpansion expected(Basis::QPrime);
  expected.add(Partition{2}, t);
  expected.add(Partition{1, 1}, t - 1);
  note.straightening_matches = qprime_indexed({0, 2}) == expected;
  return note;
}

bool defq_counterexample_check() { return defq_counterexample().holds(); }

}  // namespace hlkit
