#include "relcalc/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace relcalc {

void Signature::validate() const {
  std::unordered_set<std::string> names;
  for (const auto& op : ops) {
    if (op.name.empty())
      throw std::invalid_argument("signature: empty op name");
    if (!names.insert(op.name).second)
      throw std::invalid_argument("signature: duplicate op name " + op.name);
  }
}

std::size_t Signature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == name) return i;
  return ops.size();
}

bool Signature::operator==(const Signature& o) const {
  if (ops.size() != o.ops.size()) return false;
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name != o.ops[i].name || ops[i].arity != o.ops[i].arity)
      return false;
  return true;
}

Term Term::var(std::size_t index) {
  Term t;
  t.var_ = index;
  return t;
}

Term Term::app(std::string op, std::vector<Term> args) {
  Term t;
  t.op_ = std::move(op);
  t.args_ = std::move(args);
  return t;
}

std::size_t Term::depth() const {
  if (is_var()) return 0;
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

std::size_t Term::var_count() const {
  if (is_var()) return var_ + 1;
  std::size_t n = 0;
  for (const auto& a : args_) n = std::max(n, a.var_count());
  return n;
}

std::string Term::to_string() const {
  if (is_var()) return "x" + std::to_string(var_);
  std::string s = "(" + op_;
  for (const auto& a : args_) s += " " + a.to_string();
  return s + ")";
}

bool Term::operator==(const Term& o) const {
  return var_ == o.var_ && op_ == o.op_ && args_ == o.args_;
}

namespace {

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("term parse error at offset " +
                                std::to_string(pos) + ": " + what);
  }

  std::string atom() {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '\n' && text[pos] != '\r' && text[pos] != '(' &&
           text[pos] != ')')
      ++pos;
    if (start == pos) fail("expected an atom");
    return std::string(text.substr(start, pos - start));
  }

  Term term() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      skip_ws();
      std::string op = atom();
      std::vector<Term> args;
      while (true) {
        skip_ws();
        if (pos >= text.size()) fail("missing ')'");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        args.push_back(term());
      }
      return Term::app(std::move(op), std::move(args));
    }
    std::string a = atom();
    if (a.size() >= 2 && a[0] == 'x' &&
        std::all_of(a.begin() + 1, a.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return Term::var(std::stoul(a.substr(1)));
    // bare atom: a constant symbol
    return Term::app(std::move(a), {});
  }
};

}  // namespace

Term Term::parse(std::string_view text) {
  TermParser p{text};
  Term t = p.term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

Term substitute(const Term& t, const std::vector<Term>& args) {
  if (t.is_var()) {
    if (t.var_index() >= args.size())
      throw std::invalid_argument("substitute: variable index out of range");
    return args[t.var_index()];
  }
  std::vector<Term> sub;
  sub.reserve(t.args().size());
  for (const auto& a : t.args()) sub.push_back(substitute(a, args));
  return Term::app(t.op(), std::move(sub));
}

}  // namespace relcalc
