#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hlkit/laurent_poly.hpp"

namespace hlkit {

/// Vector in Z^n: exponents of monomials and indices of Q'_v, S_v.
using IntVector = std::vector<int>;

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// stripped, so two partitions differing by zeros compare equal. Ordering is
/// lexicographic on parts, which refines dominance among partitions of equal
/// size.
class Partition {
 public:
  Partition() = default;
  /// Throws NotAPartition unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  /// λ_i with 1-based i; 0 beyond the length.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  /// Number of parts equal to k (k >= 1).
  int multiplicity(int k) const;
  /// Padded to exactly n entries. Throws LengthMismatch when length() > n.
  IntVector padded(std::size_t n) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  /// "[4,4,3,2,2,2,1]"; "[]" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// True when v is weakly decreasing and its last entry is >= 0.
bool is_partition(const IntVector& v);
/// Partition from a vector that must satisfy is_partition.
Partition as_partition(const IntVector& v);

/// Accepts "4,4,3,2" (blank, "[]" or "0" for empty) and the multiplicity form
/// "1^2 2^3".
Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& p);
/// n(λ) = sum_i (i-1) λ_i.
int n_stat(const Partition& p);
/// n(λ/μ) = sum_i C(λ~_i - μ~_i, 2), defined for any pair.
int n_skew(const Partition& lambda, const Partition& mu);
/// sum_i λ~_i μ~_i
int conjugate_dot(const Partition& lambda, const Partition& mu);

/// b_λ = prod_{i>=1} (t;t)_{m_i(λ)}
LaurentPoly b_poly(const Partition& p);
/// Gaussian binomial [m, a] by exact division of t-products; 0 outside 0 <= a <= m.
LaurentPoly t_binomial(int m, int a);

bool contains(const Partition& lambda, const Partition& mu);
/// λ/μ has at most one box per row.
bool is_vertical_strip(const Partition& lambda, const Partition& mu);
/// λ/μ has at most one box per column: λ_i >= μ_i >= λ_{i+1}.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

/// v >= u iff every suffix sum of v - u is nonnegative.
bool zvec_order_geq(const IntVector& v, const IntVector& u);
/// v >= 0 in the same order.
bool zvec_nonneg(const IntVector& v);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Partitions of n with at most max_len parts.
std::vector<Partition> partitions_of(int n, std::size_t max_len);
/// Partitions of every size 0..max_size with at most max_len parts.
std::vector<Partition> partitions_up_to(int max_size, std::size_t max_len = 1000);
/// Every μ ⊆ λ.
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace hlkit
