#ifndef RELCALC_TERM_HPP
#define RELCALC_TERM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace relcalc {

struct Signature {
  struct Op {
    std::string name;
    std::size_t arity;
  };
  std::vector<Op> ops;

  void validate() const;
  /// Index of the named op, or ops.size() when absent.
  std::size_t index_of(std::string_view name) const;
  bool has(std::string_view name) const { return index_of(name) != ops.size(); }

  bool operator==(const Signature& o) const;
};

/// A term over some signature: a variable x0, x1, ... or an operation
/// applied to subterms.
class Term {
 public:
  static Term var(std::size_t index);
  static Term app(std::string op, std::vector<Term> args);

  bool is_var() const { return var_ != npos; }
  std::size_t var_index() const { return var_; }
  const std::string& op() const { return op_; }
  const std::vector<Term>& args() const { return args_; }

  std::size_t depth() const;
  /// Number of variables needed: one past the largest index used.
  std::size_t var_count() const;

  /// S-expression rendering: variables print as x0, x1, ...;
  /// applications as (op arg1 arg2 ...).
  std::string to_string() const;
  static Term parse(std::string_view text);

  bool operator==(const Term& o) const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t var_ = npos;
  std::string op_;
  std::vector<Term> args_;
};

/// Replaces variable i by args[i] throughout.
Term substitute(const Term& t, const std::vector<Term>& args);

}  // namespace relcalc

#endif
