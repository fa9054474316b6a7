#ifndef RELCALC_PERMUTABILITY_HPP
#define RELCALC_PERMUTABILITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relcalc/algebra.hpp"
#include "relcalc/clone.hpp"
#include "relcalc/congruence.hpp"
#include "relcalc/fn.hpp"

namespace relcalc {

struct PermWitness {
  Partition r, s;
  std::size_t a = 0, b = 0;
  bool in_first = true;  // (a,b) lies in the composite that starts with r
};

struct PermReport {
  std::size_t level = 2;
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<PermWitness> witness;
};

/// Compares the two n-fold alternating composites of r and s.
PermReport check_permutability(const Algebra& a, const Partition& r,
                               const Partition& s, std::size_t level);

/// Runs check_permutability over all unordered congruence pairs in
/// canonical order; the first failure is reported.
PermReport check_algebra_permutability(const Algebra& a, std::size_t level,
                                       std::size_t bound = 8);

enum class SearchStatus { Found, AbsentConfirmed, BudgetExceeded };

struct TermSearchResult {
  SearchStatus status = SearchStatus::AbsentConfirmed;
  std::vector<Term> terms;
  std::vector<std::vector<std::size_t>> tables;
  std::size_t clone_size = 0;
};

/// Searches the ternary clone for a table t with t(x,y,y) = x and
/// t(x,x,y) = y.  Absence is only reported at a clone fixpoint.
TermSearchResult find_maltsev_term(const Algebra& a, std::size_t budget = 1000000);

/// Searches the quaternary clone for tables p, q with p(x,y,y,z) = x,
/// q(x,y,y,z) = z and p(x,x,y,y) = q(x,x,y,y), joining candidates on
/// their restriction to arguments (x,x,y,y).
TermSearchResult find_quaternary_pair(const Algebra& a, std::size_t budget = 1000000);

/// An identity schema: equations over the algebra's signature extended
/// with placeholder operations $0, $1, ... standing for candidate terms.
struct Equation {
  Term lhs, rhs;
};

struct Schema {
  std::string name;
  std::size_t var_count = 0;
  std::vector<std::size_t> term_arities;  // one slot per candidate term
  std::vector<Equation> templates;
};

/// maltsev, quaternary, quasigroup-axioms, implication-axioms,
/// heyting-maltsev; throws on an unknown name.
Schema named_schema(const std::string& name);

/// The ternary Heyting term ((x -> y) -> z) ^ ((z -> y) -> x).
Term heyting_maltsev_term();

struct SchemaCheck {
  bool ok = true;
  std::size_t equation = 0;               // index of the violated equation
  std::vector<std::size_t> assignment;    // violating environment
  std::size_t lhs_value = 0, rhs_value = 0;
};

SchemaCheck verify_identity_schema(const Algebra& a, const Schema& schema,
                                   const std::vector<Term>& terms);

/// Subalgebras of the product of two same-signature algebras, one sorted
/// element list each, enumerated canonically.  In exhaustive mode every
/// subset of the product carrier is used as a seed (product size at most
/// 16); otherwise seeds are capped at the given size.
std::vector<std::vector<std::size_t>> product_subalgebras(const Algebra& a,
                                                          const Algebra& b,
                                                          bool exhaustive,
                                                          std::size_t seed_cap = 3);

struct SweepReport {
  bool clean = true;
  std::size_t checked = 0;
  bool exhaustive = false;  // seed enumeration covered the whole power set
  std::size_t seed_cap = 0;  // 0 when exhaustive
  std::vector<std::pair<std::size_t, std::size_t>> witness_pairs;
  std::string detail;
};

/// Interprets each subalgebra of a x b as a relation and looks for a
/// non-difunctional one.
SweepReport difunctionality_sweep(const Algebra& a, const Algebra& b,
                                  bool exhaustive);

/// Looks for a reflexive subalgebra of a x a that is not an equivalence
/// relation.
SweepReport reflexive_subalgebra_sweep(const Algebra& a);

struct ImageCheck {
  bool ok = true;
  bool transitive = true;
  std::size_t x = 0, y = 0, z = 0;  // witness triple when transitivity fails
  Rel image;
};

/// Direct image of a congruence along a surjective homomorphism;
/// transitivity is the live question.
ImageCheck goursat_image_check(const Algebra& a, const Algebra& b,
                               const FinFn& f, const Partition& r);

}  // namespace relcalc

#endif
