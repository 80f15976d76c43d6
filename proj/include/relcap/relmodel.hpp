#ifndef RELCAP_RELMODEL_HPP
#define RELCAP_RELMODEL_HPP

// Core relational model: values, tuples, single-relation instances, schemas
// built from key constraints and inclusion dependencies, permutations of the
// value domain, and the purely graph-theoretic classifier for binary
// instances.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relcap {

// A domain element. Values are dense indices; only identity is meaningful.
// The numeric order is used for canonical formatting and enumeration order,
// never as part of a verified property.
using Value = std::int32_t;

constexpr int kMaxArity = 3;

class Tuple {
 public:
  Tuple() : arity_(0), comps_{} {}
  Tuple(Value a, Value b) : arity_(2), comps_{a, b, 0} {}
  Tuple(Value a, Value b, Value c) : arity_(3), comps_{a, b, c} {}
  static Tuple unary(Value a) {
    Tuple t;
    t.arity_ = 1;
    t.comps_[0] = a;
    return t;
  }
  static Tuple of(const std::vector<Value>& comps);

  int arity() const { return arity_; }
  Value operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }
  // 1-based column access, matching constraint declarations.
  Value col(int column) const { return comps_[static_cast<std::size_t>(column - 1)]; }

  friend auto operator<=>(const Tuple& a, const Tuple& b) = default;

 private:
  std::int8_t arity_;
  std::array<Value, kMaxArity> comps_;
};

// A finite set of same-arity tuples. Stored sorted and duplicate-free, so
// instances compare and hash as sets. The active domain is derived, never
// stored: isolated values are unrepresentable by construction.
class Instance {
 public:
  Instance() : arity_(0) {}
  static Instance of(int arity, std::vector<Tuple> tuples);
  static Instance empty(int arity);

  int arity() const { return arity_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty_set() const { return tuples_.empty(); }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  bool contains(const Tuple& t) const;

  // Sorted distinct values occurring in any component.
  std::vector<Value> adom() const;

  // Canonical order: by tuple count, then lexicographically on the sorted
  // tuple sequence. Enumeration emits instances in exactly this order.
  friend bool operator<(const Instance& a, const Instance& b);
  friend bool operator==(const Instance& a, const Instance& b);

 private:
  int arity_;
  std::vector<Tuple> tuples_;
};

// A key over 1-based column positions: no two distinct tuples may agree on
// every listed column.
struct KeyConstraint {
  std::vector<int> columns;  // strictly increasing, within 1..arity
};

// R[lhs] subseteq R[rhs] on one relation; lhs/rhs are equal-length lists of
// distinct 1-based columns.
struct InclusionDependency {
  std::vector<int> lhs;
  std::vector<int> rhs;
};

struct SchemaDesc {
  std::string name;
  int arity = 2;
  std::vector<KeyConstraint> keys;
  std::vector<InclusionDependency> inds;
};

// Throws UsageError on malformed column lists or arity out of range.
void validate_schema(const SchemaDesc& schema);

bool satisfies_key(const Instance& inst, const KeyConstraint& key);
bool satisfies_ind(const Instance& inst, const InclusionDependency& ind);
bool satisfies_schema(const Instance& inst, const SchemaDesc& schema);

// The nine graph shapes recognised for binary instances. Each predicate is
// defined purely in terms of node degrees and edge symmetry, independent of
// any constraint checking.
enum class GraphClass {
  Digraph,         // any set of edges
  SourceFree,      // every node has an incoming edge
  SourceSinkFree,  // every node has both an incoming and an outgoing edge
  Symm,            // edge set closed under reversal
  OutdegLe1,       // out-degree at most 1 everywhere
  Cycles,          // in-degree and out-degree exactly 1 everywhere
  Outdeg1,         // out-degree exactly 1 everywhere
  SymmDeg1,        // symmetric with out-degree exactly 1 everywhere
  PathsCycles,     // in-degree and out-degree at most 1 everywhere
};

const char* to_string(GraphClass c);
std::optional<GraphClass> graph_class_from_string(std::string_view s);
const std::vector<GraphClass>& all_graph_classes();

bool graph_in_class(const Instance& inst, GraphClass c);
// All labels whose predicate holds for inst. Requires arity 2.
std::vector<GraphClass> classify_graph(const Instance& inst);

// A bijection on an explicit finite carrier of values. Values outside the
// carrier are not implicitly fixed: applying the permutation to them is a
// usage error. Use extended() to enlarge the carrier with fixed points.
class Permutation {
 public:
  static Permutation identity(std::vector<Value> carrier);
  // carrier[i] maps to image[i]; carrier must be sorted and duplicate-free,
  // image a rearrangement of it.
  static Permutation of(std::vector<Value> carrier, std::vector<Value> image);

  const std::vector<Value>& carrier() const { return carrier_; }
  const std::vector<Value>& image() const { return image_; }
  bool in_carrier(Value v) const;
  Value apply(Value v) const;  // UsageError if v outside the carrier
  bool is_identity() const;
  bool fixes(Value v) const;  // true when v in carrier and mapped to itself

  Permutation inverse() const;
  // this applied after other (same carrier required).
  Permutation compose_after(const Permutation& other) const;
  // Same mapping with extra carrier points, each fixed.
  Permutation extended(const std::vector<Value>& extra) const;

  // Disjoint cycles of length >= 2, each cycle starting at its least value,
  // cycles ordered by starting value.
  std::vector<std::vector<Value>> nontrivial_cycles() const;
  // The permutation that applies one cycle and fixes the rest of the carrier.
  Permutation cycle_only(const std::vector<Value>& cycle) const;

  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<Value> carrier_;  // sorted
  std::vector<Value> image_;    // image_[i] = image of carrier_[i]
};

// Componentwise application; every value of inst must lie in the carrier.
Instance apply_permutation(const Instance& inst, const Permutation& perm);

}  // namespace relcap

#endif
