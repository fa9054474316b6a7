#ifndef RELCALC_CLONE_HPP
#define RELCALC_CLONE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "relcalc/algebra.hpp"
#include "relcalc/term.hpp"

namespace relcalc {

/// One k-ary term operation of an algebra: its full value table (indexed
/// like an operation table, first argument most significant) and a term
/// realizing it.
struct CloneElement {
  std::size_t arity = 0;
  std::vector<std::size_t> table;
  Term witness;
};

enum class CloneStatus {
  Complete,        // closure reached a fixpoint
  Stopped,         // a visitor ended the search early
  BudgetExceeded,  // element budget hit before the fixpoint
};

struct CloneResult {
  CloneStatus status = CloneStatus::Complete;
  std::vector<CloneElement> elements;  // discovery order
};

/// Breadth-first closure of the k projections under all operations
/// applied pointwise.  Tables are deduplicated; the witness of each
/// element is a minimal-depth term, ties broken by signature order and
/// then by argument order.  The optional visitor sees every element as
/// it is discovered (projections included) and returns true to stop.
CloneResult grow_clone(
    const Algebra& a, std::size_t arity, std::size_t budget,
    const std::function<bool(const CloneElement&, std::size_t)>& visit = {});

/// Full closure; the realization of the free k-generated algebra over a.
CloneResult free_clone_table(const Algebra& a, std::size_t arity,
                             std::size_t budget = 1000000);

}  // namespace relcalc

#endif
