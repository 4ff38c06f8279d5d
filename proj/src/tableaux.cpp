#include "hlkit/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hlkit/errors.hpp"
#include "hlkit/hall_littlewood.hpp"

namespace hlkit {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (i > 0 && r.size() > rows_[i - 1].size()) throw std::invalid_argument("Tableau: shape is not a partition");
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] < 1) throw std::invalid_argument("Tableau: entries must be positive");
      if (j > 0 && r[j] < r[j - 1]) throw std::invalid_argument("Tableau: rows must weakly increase");
      if (i > 0 && r[j] <= rows_[i - 1][j]) throw std::invalid_argument("Tableau: columns must strictly increase");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return Partition(std::move(p));
}

IntVector Tableau::weight(std::size_t n) const {
  int top = 0;
  for (const auto& r : rows_)
    for (int v : r) top = std::max(top, v);
  IntVector w(std::max<std::size_t>(n, static_cast<std::size_t>(top)), 0);
  for (const auto& r : rows_)
    for (int v : r) ++w[static_cast<std::size_t>(v - 1)];
  return w;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

namespace {

struct SsytBuilder {
  const IntVector& weight;
  std::vector<int> bound;  // empty: no target shape
  std::vector<std::vector<int>> rows;
  std::vector<Tableau> out;

  int row_cap(std::size_t i) const {
    if (!bound.empty()) return i < bound.size() ? bound[i] : 0;
    return 1 << 30;
  }

  void letter(std::size_t k) {
    if (k == weight.size()) {
      if (!bound.empty()) {
        for (std::size_t i = 0; i < bound.size(); ++i)
          if (i >= rows.size() || static_cast<int>(rows[i].size()) != bound[i]) return;
      }
      std::vector<std::vector<int>> r = rows;
      while (!r.empty() && r.back().empty()) r.pop_back();
      out.emplace_back(std::move(r));
      return;
    }
    const std::vector<int> before = [&] {
      std::vector<int> s;
      for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
      return s;
    }();
    strip(k, 0, weight[k], before);
  }

  /// Places `left` copies of letter k+1 into rows i, i+1, ... as a horizontal strip over `before`.
  void strip(std::size_t k, std::size_t i, int left, const std::vector<int>& before) {
    if (left == 0) {
      letter(k + 1);
      return;
    }
    if (i > k || (!bound.empty() && i >= bound.size())) return;
    if (i >= rows.size()) rows.resize(i + 1);
    const int cur = i < before.size() ? before[i] : 0;
    int cap = row_cap(i);
    if (i > 0) cap = std::min(cap, i - 1 < before.size() ? before[i - 1] : 0);
    const int room = std::max(0, cap - cur);
    for (int a = std::min(room, left); a >= 0; --a) {
      rows[i].insert(rows[i].end(), static_cast<std::size_t>(a), static_cast<int>(k + 1));
      strip(k, i + 1, left - a, before);
      rows[i].resize(rows[i].size() - static_cast<std::size_t>(a));
    }
  }
};

std::vector<Tableau> run_ssyt(const IntVector& weight, std::vector<int> bound) {
  if (std::any_of(weight.begin(), weight.end(), [](int w) { return w < 0; })) return {};
  SsytBuilder b{weight, std::move(bound), {}, {}};
  b.letter(0);
  std::sort(b.out.begin(), b.out.end());
  return std::move(b.out);
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const IntVector& weight) {
  if (std::accumulate(weight.begin(), weight.end(), 0) != shape.size()) return {};
  if (shape.empty()) return {Tableau()};
  return run_ssyt(weight, shape.parts());
}

std::vector<Tableau> enumerate_ssyt_by_weight(const IntVector& weight) { return run_ssyt(weight, {}); }

int charge(const std::vector<int>& word) {
  int top = 0;
  for (int v : word) {
    if (v < 1) throw NonDominantWeight("charge: letters must be positive");
    top = std::max(top, v);
  }
  std::vector<int> count(static_cast<std::size_t>(top) + 1, 0);
  for (int v : word) ++count[static_cast<std::size_t>(v)];
  for (int k = 2; k <= top; ++k)
    if (count[static_cast<std::size_t>(k)] > count[static_cast<std::size_t>(k - 1)])
      throw NonDominantWeight("charge: content of the word is not a partition");

  // Standard subwords are peeled off right to left: from the rightmost free
  // 1, each next letter is the nearest free one to its left, wrapping round
  // to the right end; a wrap raises the index by one.
  const std::vector<int>& w = word;
  std::vector<bool> used(w.size(), false);
  const long len = static_cast<long>(w.size());
  int total = 0;
  std::size_t remaining = w.size();
  while (remaining > 0) {
    long pos = -1;
    for (long j = len - 1; j >= 0; --j)
      if (!used[static_cast<std::size_t>(j)] && w[static_cast<std::size_t>(j)] == 1) {
        pos = j;
        break;
      }
    used[static_cast<std::size_t>(pos)] = true;
    --remaining;
    int index = 0;
    for (int r = 2;; ++r) {
      long found = -1;
      bool wrapped = false;
      for (long j = pos - 1; j >= 0; --j)
        if (!used[static_cast<std::size_t>(j)] && w[static_cast<std::size_t>(j)] == r) {
          found = j;
          break;
        }
      if (found < 0) {
        wrapped = true;
        for (long j = len - 1; j > pos; --j)
          if (!used[static_cast<std::size_t>(j)] && w[static_cast<std::size_t>(j)] == r) {
            found = j;
            break;
          }
      }
      if (found < 0) break;
      if (wrapped) ++index;
      total += index;
      used[static_cast<std::size_t>(found)] = true;
      --remaining;
      pos = found;
    }
  }
  return total;
}

int charge_tableau(const Tableau& t) { return charge(t.reading_word()); }

std::vector<PlanePartitionLayers> enumerate_plane_partitions(const Partition& shape, int max_entry) {
  std::vector<PlanePartitionLayers> out;
  if (max_entry < 0) return out;
  if (max_entry == 0) {
    if (shape.empty()) out.push_back({{shape}});
    return out;
  }
  std::vector<Partition> chain{shape};
  std::function<void(int)> rec = [&](int layer) {
    if (layer == max_entry) {
      if (chain.back().empty()) out.push_back({chain});
      return;
    }
    if (layer + 1 == max_entry) {
      chain.emplace_back();
      rec(layer + 1);
      chain.pop_back();
      return;
    }
    for (const Partition& inner : subpartitions(chain.back())) {
      chain.push_back(inner);
      rec(layer + 1);
      chain.pop_back();
    }
  };
  rec(0);
  return out;
}

XPoly aleph_weight(const PlanePartitionLayers& pp, std::size_t nvars) {
  if (pp.chain.empty()) throw std::invalid_argument("aleph_weight: empty chain");
  const std::size_t layers = pp.chain.size() - 1;
  if (layers > nvars) throw LengthMismatch("aleph_weight: more layers than variables");
  LaurentPoly c(1);
  Exponent e(nvars, 0);
  for (std::size_t k = 1; k <= layers; ++k) {
    const Partition& outer = pp.chain[k - 1];
    const Partition& inner = pp.chain[k];
    if (!contains(outer, inner)) throw std::invalid_argument("aleph_weight: chain is not decreasing");
    c *= aleph(outer, inner);
    e[k - 1] = outer.size() - inner.size();
  }
  return XPoly::monomial(std::move(e), c);
}

}  // namespace hlkit
