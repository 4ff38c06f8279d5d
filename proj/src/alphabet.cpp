#include "hlkit/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hlkit/errors.hpp"

namespace hlkit {

namespace {

XPoly times_letter(const XPoly& f, const Letter& l, bool negate) {
  XPoly out(f.nvars());
  Exponent e(f.nvars());
  for (const auto& [fe, c] : f.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = fe[k] + l.exponent[k];
    out.add_term(e, negate ? -c.shifted(l.tpow) : c.shifted(l.tpow));
  }
  return out;
}

}  // namespace

Alphabet::Alphabet(std::size_t nvars, std::vector<Letter> plus, std::vector<Letter> minus)
    : nvars_(nvars), plus_(std::move(plus)), minus_(std::move(minus)) {
  for (const auto* side : {&plus_, &minus_})
    for (const auto& l : *side)
      if (l.exponent.size() != nvars_) throw LengthMismatch("Alphabet: letter over a different variable layout");
  normalize();
}

void Alphabet::normalize() {
  std::sort(plus_.begin(), plus_.end());
  std::sort(minus_.begin(), minus_.end());
  std::vector<Letter> p, m;
  std::size_t i = 0, j = 0;
  while (i < plus_.size() || j < minus_.size()) {
    if (j == minus_.size() || (i < plus_.size() && plus_[i] < minus_[j])) {
      p.push_back(plus_[i++]);
    } else if (i == plus_.size() || minus_[j] < plus_[i]) {
      m.push_back(minus_[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  plus_ = std::move(p);
  minus_ = std::move(m);
}

Alphabet Alphabet::letter(std::size_t nvars, int tpow, Exponent e) {
  if (e.empty()) e.assign(nvars, 0);
  return Alphabet(nvars, {Letter{tpow, std::move(e)}}, {});
}

Alphabet Alphabet::t_power(std::size_t nvars, int r) { return letter(nvars, r, Exponent(nvars, 0)); }

Alphabet Alphabet::variables(std::size_t nvars, std::size_t first, std::size_t count) {
  if (first + count > nvars) throw IndexOutOfRange("Alphabet::variables: range exceeds the layout");
  std::vector<Letter> plus;
  for (std::size_t k = first; k < first + count; ++k) {
    Exponent e(nvars, 0);
    e[k] = 1;
    plus.push_back({0, std::move(e)});
  }
  return Alphabet(nvars, std::move(plus), {});
}

Alphabet operator+(const Alphabet& a, const Alphabet& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Alphabet: variable layouts differ");
  std::vector<Letter> plus = a.plus_, minus = a.minus_;
  plus.insert(plus.end(), b.plus_.begin(), b.plus_.end());
  minus.insert(minus.end(), b.minus_.begin(), b.minus_.end());
  return Alphabet(a.nvars_, std::move(plus), std::move(minus));
}

Alphabet operator*(const Alphabet& a, const Alphabet& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Alphabet: variable layouts differ");
  auto mul = [&](const Letter& x, const Letter& y) {
    Letter l{x.tpow + y.tpow, x.exponent};
    for (std::size_t k = 0; k < l.exponent.size(); ++k) l.exponent[k] += y.exponent[k];
    return l;
  };
  std::vector<Letter> plus, minus;
  for (const auto& x : a.plus_) {
    for (const auto& y : b.plus_) plus.push_back(mul(x, y));
    for (const auto& y : b.minus_) minus.push_back(mul(x, y));
  }
  for (const auto& x : a.minus_) {
    for (const auto& y : b.plus_) minus.push_back(mul(x, y));
    for (const auto& y : b.minus_) plus.push_back(mul(x, y));
  }
  return Alphabet(a.nvars_, std::move(plus), std::move(minus));
}

Alphabet Alphabet::times_one_minus_t() const { return *this * (t_power(nvars_, 0) - t_power(nvars_, 1)); }

std::vector<XPoly> Alphabet::complete(int D) const {
  if (D < 0) return {};
  std::vector<XPoly> h(static_cast<std::size_t>(D) + 1, XPoly(nvars_));
  h[0] = XPoly::constant(nvars_, 1);
  for (const auto& a : plus_)
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += times_letter(h[k - 1], a, false);
  for (const auto& b : minus_)
    for (std::size_t k = h.size(); k-- > 1;) h[k] += times_letter(h[k - 1], b, true);
  return h;
}

std::vector<XPoly> Alphabet::elementary(int D) const {
  std::vector<XPoly> e = (-*this).complete(D);
  for (std::size_t k = 1; k < e.size(); k += 2) e[k] = -e[k];
  return e;
}

XPoly Alphabet::power_sum(int k) const {
  XPoly p(nvars_);
  auto add = [&](const Letter& l, int sign) {
    Exponent e = l.exponent;
    for (auto& v : e) v *= k;
    p.add_term(e, LaurentPoly::monomial(sign, l.tpow * k));
  };
  for (const auto& l : plus_) add(l, 1);
  for (const auto& l : minus_) add(l, -1);
  return p;
}

std::string Alphabet::to_string(std::span<const std::string> names) const {
  if (plus_.empty() && minus_.empty()) return "0";
  std::vector<std::string> fallback;
  if (names.size() < nvars_) {
    fallback = default_names(nvars_);
    names = fallback;
  }
  auto render = [&](const Letter& l) {
    std::string s = l.as_poly().to_string(names);
    return s;
  };
  std::string out;
  for (const auto& l : plus_) out += (out.empty() ? "" : " + ") + render(l);
  for (const auto& l : minus_) out += (out.empty() ? "-" : " - ") + render(l);
  return out;
}

AlphabetContext AlphabetContext::standard(std::size_t nx, std::size_t ny) {
  AlphabetContext ctx;
  ctx.var_names = default_names(nx, "x");
  for (auto& n : default_names(ny, "y")) ctx.var_names.push_back(n);
  const std::size_t n = nx + ny;
  ctx.bindings.emplace("X", Alphabet::variables(n, 0, nx));
  ctx.bindings.emplace("Y", Alphabet::variables(n, nx, ny));
  return ctx;
}

namespace {

class AlphabetParser {
 public:
  AlphabetParser(std::string_view text, const AlphabetContext& ctx) : text_(text), ctx_(ctx) {}

  Alphabet parse() {
    Alphabet a = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("alphabet '" + std::string(text_) + "': " + msg);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int integer() {
    skip();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("integer expected");
    int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Alphabet expr() {
    Alphabet a = term();
    for (;;) {
      if (eat('+'))
        a = a + term();
      else if (eat('-'))
        a = a - term();
      else
        return a;
    }
  }
  Alphabet term() {
    Alphabet a = factor();
    while (eat('*')) a = a * factor();
    return a;
  }
  Alphabet factor() {
    const std::size_t n = ctx_.nvars();
    if (eat('-')) return -factor();
    if (eat('(')) {
      Alphabet a = expr();
      if (!eat(')')) fail("')' expected");
      return a;
    }
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const int count = integer();
      Alphabet a(n);
      for (int k = 0; k < count; ++k) a = a + Alphabet::t_power(n, 0);
      return a;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "t") return Alphabet::t_power(n, eat('^') ? integer() : 1);
      auto it = std::find(ctx_.var_names.begin(), ctx_.var_names.end(), name);
      if (it != ctx_.var_names.end())
        return Alphabet::variables(n, static_cast<std::size_t>(it - ctx_.var_names.begin()), 1);
      auto b = ctx_.bindings.find(name);
      if (b != ctx_.bindings.end()) return b->second;
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const AlphabetContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Alphabet parse_alphabet(std::string_view text, const AlphabetContext& ctx) { return AlphabetParser(text, ctx).parse(); }

XPoly determinant(const std::vector<std::vector<XPoly>>& m, std::size_t nvars) {
  const std::size_t size = m.size();
  if (size == 0) return XPoly::constant(nvars, 1);
  if (size > 20) throw std::invalid_argument("determinant: matrix too large");
  // minors[mask] is the signed sum over injections of the first popcount(mask)
  // rows into the columns of mask.
  std::vector<XPoly> minors(std::size_t{1} << size, XPoly(nvars));
  minors[0] = XPoly::constant(nvars, 1);
  for (std::size_t mask = 0; mask < minors.size(); ++mask) {
    if (minors[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == size) continue;
    for (std::size_t col = 0; col < size; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const XPoly& entry = m[row][col];
      if (entry.is_zero()) continue;
      const int above = __builtin_popcountll(mask >> col);
      XPoly term = minors[mask] * entry;
      if (above % 2) term = -term;
      minors[mask | (std::size_t{1} << col)] += term;
    }
  }
  return minors.back();
}

namespace {

XPoly jacobi_trudi(const std::vector<int>& rows, const std::vector<int>& inner, const std::vector<XPoly>& h,
                   std::size_t nvars) {
  const std::size_t L = rows.size();
  std::vector<std::vector<XPoly>> m(L, std::vector<XPoly>(L, XPoly(nvars)));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const int k = rows[i] - (j < inner.size() ? inner[j] : 0) - static_cast<int>(i) + static_cast<int>(j);
      if (k >= 0 && static_cast<std::size_t>(k) < h.size()) m[i][j] = h[static_cast<std::size_t>(k)];
    }
  return determinant(m, nvars);
}

}  // namespace

XPoly schur_eval(const Partition& lambda, const Alphabet& a) {
  if (lambda.empty()) return XPoly::constant(a.nvars(), 1);
  if (static_cast<std::size_t>(lambda.part(1)) < lambda.length()) {
    const Partition c = conjugate(lambda);
    return jacobi_trudi(c.parts(), {}, a.elementary(c.part(1) + static_cast<int>(c.length())), a.nvars());
  }
  return jacobi_trudi(lambda.parts(), {}, a.complete(lambda.part(1) + static_cast<int>(lambda.length())), a.nvars());
}

XPoly skew_schur_eval(const Partition& lambda, const Partition& mu, const Alphabet& a) {
  if (!contains(lambda, mu)) return XPoly(a.nvars());
  if (lambda.empty()) return XPoly::constant(a.nvars(), 1);
  return jacobi_trudi(lambda.parts(), mu.parts(), a.complete(lambda.part(1) + static_cast<int>(lambda.length())),
                      a.nvars());
}

XPoly resultant(const Letter& y, const Alphabet& x) {
  if (!x.is_positive()) throw PreconditionViolation("resultant: alphabet must have no minus letters");
  XPoly r = XPoly::constant(x.nvars(), 1);
  const XPoly yp = y.as_poly();
  for (const auto& l : x.plus()) r = r * (yp - l.as_poly());
  return r;
}

std::pair<XPoly, XPoly> berele_regev_sides(const Partition& nu, const Partition& zeta, const Alphabet& a,
                                           const Alphabet& b) {
  if (!a.is_positive() || !b.is_positive()) throw PreconditionViolation("Berele-Regev: alphabets must be positive");
  const std::size_t alpha = a.plus().size();
  const int beta = static_cast<int>(b.plus().size());
  if (nu.length() > alpha) throw PreconditionViolation("Berele-Regev: ℓ(ν) exceeds |A|");
  if (zeta.part(1) > beta) throw PreconditionViolation("Berele-Regev: ζ_1 exceeds |B|");
  std::vector<int> parts;
  for (std::size_t i = 1; i <= alpha; ++i) parts.push_back(beta + nu.part(i));
  for (int z : zeta.parts()) parts.push_back(z);
  const XPoly lhs = schur_eval(Partition(parts), a - b);
  XPoly rhs = schur_eval(zeta, -b) * schur_eval(nu, a);
  for (const auto& x : a.plus())
    for (const auto& y : b.plus()) rhs = rhs * (x.as_poly() - y.as_poly());
  return {lhs, rhs};
}

bool berele_regev_check(const Partition& nu, const Partition& zeta, const Alphabet& a, const Alphabet& b) {
  auto [lhs, rhs] = berele_regev_sides(nu, zeta, a, b);
  return lhs == rhs;
}

bool berele_regev_vanishing_check(const Partition& nu, const Alphabet& a, const Alphabet& b) {
  if (!a.is_positive() || !b.is_positive()) throw PreconditionViolation("Berele-Regev: alphabets must be positive");
  const std::size_t alpha = a.plus().size();
  const int beta = static_cast<int>(b.plus().size());
  if (nu.part(alpha + 1) < beta + 1) throw PreconditionViolation("Berele-Regev: ν does not contain (β+1)^(α+1)");
  return schur_eval(nu, a - b).is_zero();
}

}  // namespace hlkit
