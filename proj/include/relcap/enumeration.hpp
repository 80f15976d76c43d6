#ifndef RELCAP_ENUMERATION_HPP
#define RELCAP_ENUMERATION_HPP

// Exhaustive, deterministic instance enumeration over finite domains, with a
// configurable work budget, plus permutation enumeration for small carriers.
//
// Instances stream in canonical order: by tuple count, then lexicographically
// on the sorted tuple sequence. Keys prune the search tree (a key violation
// can never be repaired by adding tuples); inclusion dependencies are checked
// on complete candidates only, so the stream equals a filter of the full
// powerset of the candidate tuple space.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relcap/exactmath.hpp"
#include "relcap/relmodel.hpp"

namespace relcap {

struct DomainSpec {
  int size = 0;
  std::vector<std::string> names;  // empty => v0, v1, ...

  static DomainSpec of(int n);
  static DomainSpec named(std::vector<std::string> names);
  std::vector<Value> values() const;  // 0 .. size-1
  std::string name_of(Value v) const;
};

struct EnumLimits {
  // Cap on explored search nodes (attempted tuple placements); full-set
  // consumers also fail upfront when a keyless schema's 2^(n^arity)
  // candidate subsets already exceed it.
  std::uint64_t node_budget = std::uint64_t(1) << 24;
};

class InstanceStream {
 public:
  InstanceStream(SchemaDesc schema, std::vector<Value> universe, EnumLimits limits = {});

  // Next instance in canonical order, or nullopt when exhausted.
  // Throws ResourceError when the node budget is exceeded.
  std::optional<Instance> next();

  std::uint64_t explored() const { return explored_; }
  const SchemaDesc& schema() const { return schema_; }

 private:
  bool keys_admit(int cand) const;
  void mark(int cand, bool used);
  bool backtrack();  // false when fully exhausted
  Instance make_current() const;

  SchemaDesc schema_;
  std::vector<Value> universe_;
  std::vector<Tuple> candidates_;  // universe^arity in lex order
  int max_size_ = 0;               // largest instance size any key admits
  std::vector<std::vector<int>> key_codes_;  // [key][candidate] projection code
  std::vector<std::vector<char>> key_used_;  // [key][code]
  int total_ = 0;    // number of candidate tuples
  int target_ = 0;   // current instance size being emitted
  int cursor_ = 0;   // next candidate index to try
  std::vector<int> chosen_;
  bool exhausted_ = false;
  std::uint64_t explored_ = 0;
  EnumLimits limits_;
};

InstanceStream enumerate_instances(const SchemaDesc& schema, const DomainSpec& dom,
                                   EnumLimits limits = {});
// Enumeration over an explicit (sorted, distinct) value universe; used when
// the relevant carrier is not a 0-based prefix.
InstanceStream enumerate_instances_over(const SchemaDesc& schema, std::vector<Value> universe,
                                        EnumLimits limits = {});

// Full materialisations. These fail upfront with a ResourceError when a
// keyless schema's candidate subset count exceeds the budget.
std::vector<Instance> collect_instances(const SchemaDesc& schema, const DomainSpec& dom,
                                        EnumLimits limits = {});
BigCount count_instances(const SchemaDesc& schema, const DomainSpec& dom, EnumLimits limits = {});

// All permutations of carrier fixing every value of `fixed` pointwise, in a
// deterministic order starting with the identity. The number of moved points
// is capped at 8 (ResourceError beyond).
std::vector<Permutation> permutations_fixing(const std::vector<Value>& carrier,
                                             const std::vector<Value>& fixed);
std::vector<Permutation> enumerate_permutations(const DomainSpec& dom,
                                                const std::vector<Value>& fixed = {});

}  // namespace relcap

#endif
