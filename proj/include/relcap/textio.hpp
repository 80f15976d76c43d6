#ifndef RELCAP_TEXTIO_HPP
#define RELCAP_TEXTIO_HPP

#include <string>
#include <vector>

#include "relcap/enumeration.hpp"
#include "relcap/relmodel.hpp"

namespace relcap {

// All formatters print values via `dom` when one is given, otherwise as bare
// integers.  Output is deterministic: instances rely on the sorted tuple
// order maintained by Instance itself.

std::string format_value(Value v, const DomainSpec* dom = nullptr);
std::string format_tuple(const Tuple& t, const DomainSpec* dom = nullptr);

// "{}" for the empty instance, "{(0,1),(2,2)}" otherwise; unary instances
// print without parentheses: "{0,2}".
std::string format_instance(const Instance& inst, const DomainSpec* dom = nullptr);

// Relations of a multi-relation source, joined by ';'.
std::string format_instances(const std::vector<Instance>& rels, const DomainSpec* dom = nullptr);

// Cycle notation over the nontrivial cycles, e.g. "(0 1)(2 3 4)"; "id" when
// the permutation moves nothing.
std::string format_permutation(const Permutation& p, const DomainSpec* dom = nullptr);

// Inverse of the formatters.  Values are either names from `dom` or
// non-negative integers.  Throws UsageError on malformed input.
Value parse_value(const std::string& token, const DomainSpec* dom = nullptr);
Instance parse_instance(int arity, const std::string& text, const DomainSpec* dom = nullptr);
std::vector<Instance> parse_instances(int arity, const std::string& text,
                                      const DomainSpec* dom = nullptr);

std::string dot_escape(const std::string& s);

// Line-based instance files: one tuple per line, whitespace-separated value
// tokens, blank lines and lines starting with "--" ignored. When every token
// is an integer the values are used as given; otherwise all tokens are
// interned to dense indices by first appearance and `names` carries the
// mapping. Tokens must not start with '#' (reserved for identifier columns).
struct NamedInstance {
  Instance instance;
  std::vector<std::string> names;  // empty => numeric values
};

NamedInstance read_instance_lines(const std::string& text);
std::string write_instance_lines(const Instance& inst, const std::vector<std::string>& names);

}  // namespace relcap

#endif  // RELCAP_TEXTIO_HPP
