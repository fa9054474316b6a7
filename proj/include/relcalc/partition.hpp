#ifndef RELCALC_PARTITION_HPP
#define RELCALC_PARTITION_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "relcalc/carrier.hpp"
#include "relcalc/rel.hpp"

namespace relcalc {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns true when two previously distinct classes were merged.
  bool unite(std::size_t x, std::size_t y) {
    std::size_t rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (ry < rx) std::swap(rx, ry);
    parent_[ry] = rx;
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

/// Partition of 0..n-1 in canonical form: block ids are assigned by
/// first occurrence, so block_of is a restricted growth string.
struct Partition {
  std::vector<std::size_t> block_of;
  std::size_t block_count = 0;

  std::size_t size() const { return block_of.size(); }
  bool same_block(std::size_t a, std::size_t b) const {
    return block_of[a] == block_of[b];
  }

  static Partition discrete(std::size_t n);
  static Partition indiscrete(std::size_t n);
  static Partition from_union_find(UnionFind& uf);
  static Partition from_pairs(
      std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& ps);

  std::vector<std::vector<std::size_t>> blocks() const;

  /// Every block of this partition lies inside a block of the coarser one.
  bool refines(const Partition& coarser) const;

  /// Common refinement (lattice meet).
  static Partition meet(const Partition& a, const Partition& b);
  /// Join: smallest partition coarser than both.
  static Partition join(const Partition& a, const Partition& b);

  bool operator==(const Partition& o) const = default;

  /// Visits every partition of 0..n-1 in restricted-growth-string order.
  /// The visitor returns false to stop early.
  static void enumerate(std::size_t n,
                        const std::function<bool(const Partition&)>& visit);
};

Rel partition_to_rel(const Carrier& x, const Partition& p);

/// Requires an equivalence relation.
Partition rel_to_partition(const Rel& r);

}  // namespace relcalc

#endif
