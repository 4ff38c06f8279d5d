#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hlkit/partition.hpp"
#include "hlkit/xpoly.hpp"

namespace hlkit {

/// Semistandard tableau in English notation: rows[0] is the longest row,
/// rows weakly increase left to right and columns strictly increase downward.
/// The French picture used for plane partitions is the same array read
/// upside down.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  /// Multiplicities of 1..n (n = largest entry unless a larger n is given).
  IntVector weight(std::size_t n = 0) const;
  /// Rows from the bottom (shortest) to the top, each left to right. The
  /// super-standard tableau of shape μ reads ...3^{μ_3} 2^{μ_2} 1^{μ_1}.
  std::vector<int> reading_word() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Tableaux of the given shape and content; weight[k-1] copies of k.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const IntVector& weight);
/// Tableaux of every shape with the given content.
std::vector<Tableau> enumerate_ssyt_by_weight(const IntVector& weight);

/// Charge of a word whose content is a partition. Throws NonDominantWeight
/// otherwise. Normalized by ch(...3 2 1) = 0 and ch(w i) = ch(i w) + 1 for i > 1.
int charge(const std::vector<int>& word);
int charge_tableau(const Tableau& t);

/// λ = λ^0 ⊇ λ^1 ⊇ ... ⊇ λ^n = ∅; letter k occupies λ^{k-1}/λ^k, so letters
/// weakly increase toward the origin. Empty layers are allowed.
struct PlanePartitionLayers {
  std::vector<Partition> chain;
  friend bool operator==(const PlanePartitionLayers&, const PlanePartitionLayers&) = default;
};

/// Every chain with exactly max_entry layers (some possibly empty).
std::vector<PlanePartitionLayers> enumerate_plane_partitions(const Partition& shape, int max_entry);

/// prod_k ℵ(λ^{k-1}/λ^k) x_k^{|λ^{k-1}/λ^k|} over nvars variables
/// (nvars >= number of layers).
XPoly aleph_weight(const PlanePartitionLayers& pp, std::size_t nvars);

}  // namespace hlkit
