#include "hlkit/xpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hlkit/errors.hpp"

namespace hlkit {

XPoly XPoly::constant(std::size_t nvars, const LaurentPoly& c) {
  XPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

XPoly XPoly::monomial(Exponent e, const LaurentPoly& c) {
  XPoly p(e.size());
  p.add_term(e, c);
  return p;
}

XPoly XPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw IndexOutOfRange("XPoly::variable: index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

LaurentPoly XPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void XPoly::add_term(const Exponent& e, const LaurentPoly& c) {
  if (e.size() != nvars_) throw LengthMismatch("XPoly: exponent length differs from variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void XPoly::check_same(const XPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("XPoly: variable sets differ");
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

XPoly& XPoly::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

namespace {

void accumulate_product(XPoly::TermMap& out, const XPoly::TermMap& a, const XPoly::TermMap& b,
                        std::span<const int> weights, int cap, bool capped) {
  Exponent sum;
  for (const auto& [ea, ca] : a) {
    int wa = 0;
    if (capped)
      for (std::size_t k = 0; k < ea.size(); ++k) wa += weights[k] * ea[k];
    for (const auto& [eb, cb] : b) {
      if (capped) {
        int w = wa;
        for (std::size_t k = 0; k < eb.size(); ++k) w += weights[k] * eb[k];
        if (w > cap) continue;
      }
      sum = ea;
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += eb[k];
      auto [it, inserted] = out.try_emplace(sum);
      it->second += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

XPoly operator*(const XPoly& a, const XPoly& b) {
  a.check_same(b);
  XPoly r(a.nvars_);
  accumulate_product(r.terms_, a.terms_, b.terms_, {}, 0, false);
  return r;
}

XPoly XPoly::mul_truncated(const XPoly& o, std::span<const int> weights, int cap) const {
  check_same(o);
  if (weights.size() != nvars_) throw LengthMismatch("mul_truncated: weight vector length");
  XPoly r(nvars_);
  accumulate_product(r.terms_, terms_, o.terms_, weights, cap, true);
  return r;
}

XPoly XPoly::truncated(std::span<const int> weights, int cap) const {
  if (weights.size() != nvars_) throw LengthMismatch("truncated: weight vector length");
  return filtered([&](const Exponent& e) {
    int w = 0;
    for (std::size_t k = 0; k < e.size(); ++k) w += weights[k] * e[k];
    return w <= cap;
  });
}

XPoly XPoly::pow(unsigned k) const {
  XPoly r = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

XPoly XPoly::filtered(const std::function<bool(const Exponent&)>& pred) const {
  XPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (pred(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

XPoly XPoly::map_exponents(const std::function<Exponent(const Exponent&)>& f) const {
  XPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(f(e), c);
  return r;
}

XPoly XPoly::exact_div_coeffs(const LaurentPoly& d) const {
  XPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, exact_div(c, d));
  return r;
}

XPoly XPoly::divided_by(const Integer& d) const {
  XPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.divided_by(d));
  return r;
}

XPoly XPoly::embed(std::size_t new_nvars, std::span<const std::size_t> positions) const {
  if (positions.size() != nvars_) throw LengthMismatch("embed: one position per variable required");
  XPoly r(new_nvars);
  Exponent target(new_nvars, 0);
  for (const auto& [e, c] : terms_) {
    std::fill(target.begin(), target.end(), 0);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (positions[k] >= new_nvars) throw IndexOutOfRange("embed: position out of range");
      target[positions[k]] += e[k];
    }
    r.add_term(target, c);
  }
  return r;
}

int XPoly::total_degree_max() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    best = first ? d : std::max(best, d);
    first = false;
  }
  return best;
}

int XPoly::total_degree_min() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    best = first ? d : std::min(best, d);
    first = false;
  }
  return best;
}

std::vector<std::string> default_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

std::string XPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> fallback;
  if (names.size() < nvars_) {
    fallback = default_names(nvars_);
    names = fallback;
  }
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (any) mono << '*';
      any = true;
      mono << names[k];
      if (e[k] != 1) mono << '^' << e[k];
    }
    const bool negative = c.is_monomial() && c.coeff(c.low_degree()) < 0;
    const LaurentPoly mag = negative ? -c : c;
    std::string coeff = mag.to_compact_string();
    std::string term;
    if (!any)
      term = coeff;
    else if (coeff == "1")
      term = mono.str();
    else if (mag.is_monomial())
      term = coeff + "*" + mono.str();
    else
      term = "(" + coeff + ")*" + mono.str();
    if (first)
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

XPoly divide_by_difference(const XPoly& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.nvars();
  if (i >= n || j >= n || i == j) throw IndexOutOfRange("divide_by_difference: bad variable pair");
  // Terms sharing every exponent except along (x_i, x_j), and with equal
  // e_i + e_j, form a Laurent polynomial in z = x_i/x_j. A quotient exists
  // iff z = 1 is a root; synthetic division runs from the top power down.
  struct Key {
    Exponent rest;
    int total;
    bool operator<(const Key& o) const { return std::tie(rest, total) < std::tie(o.rest, o.total); }
  };
  std::map<Key, std::map<int, LaurentPoly>> groups;
  for (const auto& [e, c] : a.terms()) {
    Key key{e, e[i] + e[j]};
    key.rest[i] = key.rest[j] = 0;
    groups[key].emplace(e[i], c);
  }
  XPoly q(n);
  for (const auto& [key, series] : groups) {
    // N = sum_k c_k z^k with c_k = q_{k-1} - q_k, so q_{k-1} = c_k + q_k.
    LaurentPoly carry;
    const int top = series.rbegin()->first;
    const int bottom = series.begin()->first;
    for (int k = top; k > bottom; --k) {
      auto it = series.find(k);
      if (it != series.end()) carry += it->second;
      if (carry.is_zero()) continue;
      Exponent e = key.rest;
      e[i] = k - 1;
      e[j] = key.total - k;
      q.add_term(e, carry);
    }
    carry += series.begin()->second;
    if (!carry.is_zero()) throw NotDivisible("polynomial is not divisible by (x_i - x_j)");
  }
  return q;
}

XPoly xp_exact_div_linear(const XPoly& a, const XPoly& d) {
  if (d.size() != 2) throw std::invalid_argument("xp_exact_div_linear: divisor must be +-(x_i - x_j)");
  auto it = d.terms().begin();
  const auto& [e1, c1] = *it++;
  const auto& [e2, c2] = *it;
  auto single_var = [](const Exponent& e) -> long {
    long idx = -1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (e[k] != 1 || idx >= 0) return -1;
      idx = static_cast<long>(k);
    }
    return idx;
  };
  const long v1 = single_var(e1), v2 = single_var(e2);
  if (v1 < 0 || v2 < 0 || c1 != -c2 || (c1 != LaurentPoly(1) && c1 != LaurentPoly(-1)))
    throw std::invalid_argument("xp_exact_div_linear: divisor must be +-(x_i - x_j)");
  // d = c1 * (x_{v1} - x_{v2})
  XPoly q = divide_by_difference(a, static_cast<std::size_t>(v1), static_cast<std::size_t>(v2));
  if (c1 == LaurentPoly(-1)) q = -q;
  return q;
}

}  // namespace hlkit
