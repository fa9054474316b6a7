#ifndef RELCALC_REL_HPP
#define RELCALC_REL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "relcalc/carrier.hpp"
#include "relcalc/dense_set.hpp"

namespace relcalc {

/// Binary relation between two finite carriers, one bitset row per
/// domain element.  Bit (x,y) is set iff x is related to y.
struct Rel {
  Carrier dom;
  Carrier cod;
  std::vector<DenseSet> rows;

  Rel() = default;
  Rel(Carrier d, Carrier c)
      : dom(std::move(d)), cod(std::move(c)),
        rows(dom.size, DenseSet(cod.size)) {}

  static Rel from_pairs(Carrier d, Carrier c,
                        const std::vector<std::pair<std::size_t, std::size_t>>& ps);

  bool contains(std::size_t x, std::size_t y) const { return rows[x].test(y); }
  void add(std::size_t x, std::size_t y) { rows[x].set(y); }

  /// Set pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  std::size_t pair_count() const;

  /// Equality of extent; carriers compare by size.
  bool operator==(const Rel& o) const {
    return dom.size == o.dom.size && cod.size == o.cod.size && rows == o.rows;
  }
};

/// `compose(r, s)` applies r first, then s; in the usual right-to-left
/// notation this is the composite s . r.
Rel compose(const Rel& r, const Rel& s);

Rel opposite(const Rel& r);

/// The equality relation on x.
Rel diagonal(const Carrier& x);

bool subset(const Rel& a, const Rel& b);

/// Pointwise union; carriers must agree in size.
Rel rel_union(const Rel& a, const Rel& b);

struct RelFlags {
  bool endo = false;  // the next four are only meaningful on endo-relations
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool difunctional = false;
  bool equivalence = false;  // reflexive and symmetric and transitive
};

RelFlags classify(const Rel& r);

/// Smallest equivalence relation containing r (endo-relations only).
Rel equivalence_closure(const Rel& r);

/// Composite of n alternating factors r, s, r, ... with r applied first;
/// n = 1 gives r, n = 2 gives s.r, n = 3 gives r.s.r.
Rel alternating_composite(const Rel& r, const Rel& s, std::size_t n);

}  // namespace relcalc

#endif
