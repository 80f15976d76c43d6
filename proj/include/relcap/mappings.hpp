#ifndef RELCAP_MAPPINGS_HPP
#define RELCAP_MAPPINGS_HPP

#include <functional>
#include <string>
#include <vector>

#include "relcap/enumeration.hpp"
#include "relcap/relmodel.hpp"

namespace relcap {

// A source is one instance of a fixed schema, or — for the tagging map — a
// family of unary relations treated as one multi-component instance.
struct SourceInstance {
  std::vector<Instance> rels;

  static SourceInstance single(Instance inst);
  bool operator==(const SourceInstance& o) const { return rels == o.rels; }
  bool operator<(const SourceInstance& o) const { return rels < o.rels; }
};

struct SourceSpace {
  int unary_family = 0;  // > 0: that many unary components; 0: use `schema`
  SchemaDesc schema;

  int components() const { return unary_family > 0 ? unary_family : 1; }
};

struct MappingEntry {
  std::string name;
  SourceSpace source;
  SchemaDesc target;
  std::vector<Value> constants;  // values the mapping may introduce
  bool expected_generic = true;
  std::function<Instance(const SourceInstance&)> forward;
  // Unverified inverse; absent (empty) when no recovery procedure exists.
  std::function<SourceInstance(const Instance&)> inverse_unchecked;

  bool has_inverse() const { return static_cast<bool>(inverse_unchecked); }
};

// Column transposition between a swap-equivalent binary pair, e.g. S5 -> S10.
MappingEntry map_swap_columns(const std::string& source_name = "S5",
                              const std::string& target_name = "S10");

// Adds a self-loop at every source node and an edge from every sink to every
// source, landing in the source&sink-free class; exactly invertible.
MappingEntry map_outdegle1_to_ssfree();

// Adds a self-loop at every sink, turning paths&cycles into outdegree-one
// graphs; exactly invertible.
MappingEntry map_close_sinks();

// Tags the members of k unary relations with one constant per relation,
// producing a single binary relation.
MappingEntry map_unary_tagging(int k);

// Splits each keyed triple into one or two triples that satisfy all three
// two-column keys; exactly invertible.
MappingEntry map_t1_to_t6();

// Injective but order-sensitive encoding of pairs into single values;
// ships as the stock negative example for the genericity checker.
MappingEntry map_prime_encode();

const std::vector<MappingEntry>& mapping_catalog();
const MappingEntry& find_mapping(const std::string& name);  // UsageError if unknown

// All source instances over the domain, in canonical order (componentwise
// for families).
std::vector<SourceInstance> enumerate_source(const SourceSpace& space, const DomainSpec& dom,
                                             EnumLimits limits = {});

// True when every component satisfies its constraints (family components are
// plain unary relations; single-component sources must satisfy the schema).
bool source_satisfies(const SourceSpace& space, const SourceInstance& inst);

SourceInstance permute_source(const SourceInstance& inst, const Permutation& p);

// Checked application: UsageError when inst violates the source space,
// ConsistencyError when the image violates the target schema.
Instance apply_mapping(const MappingEntry& map, const SourceInstance& inst);
Instance apply_mapping(const MappingEntry& map, const Instance& inst);

// Checked inversion: recovers a preimage and re-applies forward; mismatch or
// unrecognizable input raises RecoveryError.
SourceInstance invert_mapping(const MappingEntry& map, const Instance& image);

}  // namespace relcap

#endif  // RELCAP_MAPPINGS_HPP
