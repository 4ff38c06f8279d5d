#include "hlkit/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hlkit/errors.hpp"

namespace hlkit {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int e) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = e;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms) {
  LaurentPoly p;
  if (terms.empty()) return p;
  p.low_ = terms.begin()->first;
  p.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1), Integer(0));
  for (const auto& [e, c] : terms) p.coeffs_[static_cast<std::size_t>(e - p.low_)] = c;
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Integer LaurentPoly::coeff(int e) const {
  if (coeffs_.empty() || e < low_ || e > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::map<int, Integer> LaurentPoly::terms() const {
  std::map<int, Integer> out;
  for_each_term([&](int e, const Integer& c) { out.emplace(e, c); });
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1), Integer(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

LaurentPoly LaurentPoly::divided_by(const Integer& d) const {
  if (d == 0) throw std::domain_error("LaurentPoly: division by zero");
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw NotDivisible("coefficient " + c.get_str() + " not divisible by " + d.get_str());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

Integer LaurentPoly::evaluate(const Integer& v) const {
  if (is_zero()) return 0;
  if (low_ < 0) throw std::domain_error("LaurentPoly::evaluate: negative powers of t");
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  for (int k = 0; k < low_; ++k) acc *= v;
  return acc;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (a.is_zero()) return {};
  // Work with the t-free parts A(t), B(t): both have nonzero constant term.
  std::vector<Integer> rem;
  a.for_each_term([&](int e, const Integer& c) {
    rem.resize(static_cast<std::size_t>(e - a.low_degree() + 1), Integer(0));
    rem.back() = c;
  });
  std::vector<Integer> den;
  b.for_each_term([&](int e, const Integer& c) {
    den.resize(static_cast<std::size_t>(e - b.low_degree() + 1), Integer(0));
    den.back() = c;
  });
  if (rem.size() < den.size()) throw NotDivisible(a.to_string() + " by " + b.to_string());
  const std::size_t qlen = rem.size() - den.size() + 1;
  std::map<int, Integer> q;
  const Integer& lead = den.back();
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& top = rem[k + den.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NotDivisible(a.to_string() + " by " + b.to_string());
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
    q.emplace(static_cast<int>(k), c);
  }
  for (const auto& r : rem)
    if (r != 0) throw NotDivisible(a.to_string() + " by " + b.to_string());
  return LaurentPoly::from_terms(q).shifted(a.low_degree() - b.low_degree());
}

LaurentPoly t_pochhammer_range(int from, int to) {
  LaurentPoly r(1);
  for (int j = from; j <= to; ++j) r *= LaurentPoly(1) - LaurentPoly::t(j);
  return r;
}

namespace {

std::string render(const LaurentPoly& p, bool spaced) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  p.for_each_term([&](int e, const Integer& c) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (spaced ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : "+"));
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      return;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  });
  return os.str();
}

}  // namespace

std::string LaurentPoly::to_string() const { return render(*this, true); }
std::string LaurentPoly::to_compact_string() const { return render(*this, false); }

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty Laurent polynomial");
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) -> std::string {
    std::size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  std::map<int, Integer> acc;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    first = false;
    Integer c = 1;
    int e = 0;
    std::string digits = read_int(false);
    if (!digits.empty()) c = Integer(digits);
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 't') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        std::string ex = read_int(true);
        if (ex.empty() || ex == "-" || ex == "+") throw ParseError("bad exponent in '" + s + "'");
        e = std::stoi(ex);
        if (paren) {
          if (i >= s.size() || s[i] != ')') throw ParseError("unbalanced ')' in '" + s + "'");
          ++i;
        }
      }
    } else if (digits.empty()) {
      throw ParseError("expected coefficient or 't' in '" + s + "'");
    }
    acc[e] += sign * c;
  }
  return from_terms(acc);
}

}  // namespace hlkit
