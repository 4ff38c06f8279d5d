#include "hlkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "hlkit/errors.hpp"

namespace hlkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw NotAPartition("not a partition: " + to_string());
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

IntVector Partition::padded(std::size_t n) const {
  if (parts_.size() > n) throw LengthMismatch("partition " + to_string() + " longer than " + std::to_string(n));
  IntVector v(parts_);
  v.resize(n, 0);
  return v;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

bool is_partition(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0 || (i > 0 && v[i] > v[i - 1])) return false;
  return true;
}

Partition as_partition(const IntVector& v) { return Partition(v); }

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != '(' && ch != ')') s.push_back(ch);
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  std::vector<int> parts;
  auto to_int = [&](const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad partition entry '" + tok + "' in '" + std::string(text) + "'");
    return std::stoi(tok);
  };
  bool exponent_form = std::any_of(tokens.begin(), tokens.end(), [](const std::string& t) { return t.find('^') != std::string::npos; });
  for (const auto& tok : tokens) {
    if (exponent_form) {
      auto caret = tok.find('^');
      int part = to_int(tok.substr(0, caret));
      int mult = caret == std::string::npos ? 1 : to_int(tok.substr(caret + 1));
      parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    } else {
      parts.push_back(to_int(tok));
    }
  }
  if (exponent_form) std::sort(parts.begin(), parts.end(), std::greater<>());
  try {
    return Partition(parts);
  } catch (const NotAPartition& e) {
    throw ParseError(e.what());
  }
}

Partition conjugate(const Partition& p) {
  std::vector<int> c(static_cast<std::size_t>(p.part(1)), 0);
  for (int row : p.parts())
    for (int j = 0; j < row; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

int n_stat(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.length(); ++i) s += static_cast<int>(i) * p.parts()[i];
  return s;
}

int n_skew(const Partition& lambda, const Partition& mu) {
  const Partition lc = conjugate(lambda), mc = conjugate(mu);
  const std::size_t len = std::max(lc.length(), mc.length());
  int s = 0;
  for (std::size_t i = 1; i <= len; ++i) {
    const int d = lc.part(i) - mc.part(i);
    s += d * (d - 1) / 2;
  }
  return s;
}

int conjugate_dot(const Partition& lambda, const Partition& mu) {
  const Partition lc = conjugate(lambda), mc = conjugate(mu);
  int s = 0;
  for (std::size_t i = 1; i <= std::min(lc.length(), mc.length()); ++i) s += lc.part(i) * mc.part(i);
  return s;
}

LaurentPoly b_poly(const Partition& p) {
  LaurentPoly b(1);
  for (int k = 1; k <= p.part(1); ++k) b *= t_pochhammer_range(1, p.multiplicity(k));
  return b;
}

LaurentPoly t_binomial(int m, int a) {
  if (a < 0 || a > m) return {};
  return exact_div(t_pochhammer_range(m - a + 1, m), t_pochhammer_range(1, a));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return false;
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) - mu.part(i) > 1) return false;
  return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return false;
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    if (mu.part(i) < lambda.part(i + 1)) return false;
  return true;
}

bool zvec_order_geq(const IntVector& v, const IntVector& u) {
  if (v.size() != u.size()) throw LengthMismatch("zvec_order_geq: vectors of different lengths");
  long suffix = 0;
  for (std::size_t k = v.size(); k-- > 0;) {
    suffix += v[k] - u[k];
    if (suffix < 0) return false;
  }
  return true;
}

bool zvec_nonneg(const IntVector& v) { return zvec_order_geq(v, IntVector(v.size(), 0)); }

namespace {

void gen_partitions(int remaining, int max_part, std::size_t max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == max_len) return;
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(remaining - k, k, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::size_t max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, static_cast<std::size_t>(std::max(n, 0))); }

std::vector<Partition> partitions_up_to(int max_size, std::size_t max_len) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto ps = partitions_of(n, max_len);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    if (i > lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int k = 0; k <= std::min(cap, lambda.part(i)); ++k) {
      cur.push_back(k);
      rec(i + 1, k);
      cur.pop_back();
    }
  };
  rec(1, lambda.part(1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hlkit
