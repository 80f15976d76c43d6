#ifndef RELCAP_IDS_HPP
#define RELCAP_IDS_HPP

// Instances with identifier columns: equality up to identifier renaming,
// class enumeration and automorphisms for the four single-id-column schemas,
// the boundedness contrast between id-keyed and value-keyed classes, and
// property checkers for relational mappings between such instances.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relcap/equivariance.hpp"
#include "relcap/relmodel.hpp"

namespace relcap {

using IdToken = int;  // rendered as #1, #2, ...

struct IdTuple {
  std::vector<IdToken> ids;
  std::vector<Value> values;

  friend auto operator<=>(const IdTuple& a, const IdTuple& b) = default;
};

// A finite set of tuples over id_arity identifier columns followed by
// val_arity value columns. Identifiers and values live in disjoint spaces;
// a permutation of one never touches the other.
struct IdInstance {
  int id_arity = 0;
  int val_arity = 0;
  std::vector<IdTuple> tuples;  // sorted, duplicate-free

  static IdInstance of(int id_arity, int val_arity, std::vector<IdTuple> tuples);
  static IdInstance empty(int id_arity, int val_arity);

  std::vector<IdToken> idom() const;
  std::vector<Value> value_adom() const;

  friend bool operator==(const IdInstance& a, const IdInstance& b) = default;
  friend bool operator<(const IdInstance& a, const IdInstance& b);
};

// The four (1,1) schemas keyed on neither, the id column, the value column,
// or both, plus the bare unary value vocabulary (0,1).
enum class IdSchema { KNone, KId, KVal, KBoth, V11 };

const char* to_string(IdSchema s);
std::optional<IdSchema> id_schema_from_string(std::string_view s);
const std::vector<IdSchema>& all_id_schemas();
int id_arity_of(IdSchema s);
int val_arity_of(IdSchema s);
bool satisfies_id_schema(const IdInstance& inst, IdSchema s);

IdInstance apply_value_permutation(const IdInstance& inst, const Permutation& p);
IdInstance apply_id_permutation(const IdInstance& inst, const Permutation& p);

// Renames identifiers to #1..#m so that the result depends only on the
// instance's shape, never on the incoming id labels: ids are ordered by
// their attachment signature (the sorted list of value rows they occur
// with). Idempotent; only single-id-column instances are supported.
IdInstance canonicalize_ids(const IdInstance& inst);

bool eq_up_to_ids(const IdInstance& a, const IdInstance& b);  // UsageError on arity mismatch

struct IdClass {
  IdInstance canonical;  // fixed point of canonicalize_ids
  int size_ids = 0;      // distinct identifiers
};

// All equality-up-to-ids classes of schema instances with value active
// domain inside a domain of n_values values and at most max_ids distinct
// identifiers, one canonical representative each, in canonical order.
// ResourceError when n_values > 4 or max_ids > 6.
std::vector<IdClass> enumerate_id_classes(IdSchema schema, int n_values, int max_ids);

// Every individual instance (not class) of the schema over ids #1..#max_ids
// and values 0..n_values-1, in canonical instance order. ResourceError when
// the tuple grid exceeds 16 cells.
std::vector<IdInstance> enumerate_id_instances(IdSchema schema, int n_values, int max_ids);

// All value permutations over value-adom(representative) ∪ fixed that fix
// `fixed` pointwise and map the class to itself.
AutomorphismSet class_automorphisms(const IdClass& cls, const std::vector<Value>& fixed);

struct CyclePropertyResult {
  bool pass = true;
  std::optional<IdInstance> witness_instance;
  std::optional<Permutation> witness_automorphism;
  std::optional<Permutation> witness_cycle;  // the cycle that fails alone
};

// For every id-keyed class within bounds and every class automorphism made
// of two or more disjoint nontrivial cycles, each cycle alone must again be
// a class automorphism.
CyclePropertyResult kid_cycle_property_check(int n_values, int max_ids);

struct BoundednessReport {
  int n_values = 0;
  int max_ids_min = 0;
  int max_ids_max = 0;
  std::vector<std::size_t> kid_counts;   // per max_ids in [min, max]
  std::vector<std::size_t> kval_counts;  // per max_ids in [min, max]
  bool kval_stabilizes = false;          // constant once max_ids >= n_values
  bool kid_strictly_increasing = false;  // grows at every tested step
};

// Class counts of the id-keyed and value-keyed schemas as the id budget
// grows. Strict growth on one side against stabilization on the other is a
// finite-scale surrogate for the bounded/unbounded contrast; the report
// states it as such.
BoundednessReport kval_boundedness_report(int n_values, int max_ids_min, int max_ids_max);
std::string format_boundedness_report(const BoundednessReport& rep);

struct IdMappingPair {
  std::string name;
  IdSchema source, target;
  std::function<IdInstance(const IdInstance&)> forward;
  std::function<IdInstance(const IdInstance&)> backward;
};

// Forward: drop the (redundant) identifier column of a doubly keyed
// instance. Backward: attach one fresh identifier per value. Both round
// trips are identities up to ids.
IdMappingPair map_kboth_unary();

// A relational mapping given explicitly as a finite set of instance pairs.
using IdPairSet = std::vector<std::pair<IdInstance, IdInstance>>;

struct IdMapCheck {
  bool pass = true;
  std::string detail;  // description of the offending pair(s)
};

// Every instance of `domain` occurs as a left component.
IdMapCheck check_total(const IdPairSet& pairs, const std::vector<IdInstance>& domain);
// Equal left components force right components equal up to ids.
IdMapCheck check_functional_up_to_ids(const IdPairSet& pairs);
// Equal right components force left components equal up to ids.
IdMapCheck check_injective_up_to_ids(const IdPairSet& pairs);
// Closure under every value permutation fixing `constants`, over the union
// of all value active domains plus the constants.
IdMapCheck check_generic_for_values(const IdPairSet& pairs, const std::vector<Value>& constants);
// Closure under every permutation of the ids occurring anywhere in the set.
IdMapCheck check_generic_for_ids(const IdPairSet& pairs);
// Every instance of `codomain` occurs as a right component.
IdMapCheck check_surjective_up_to_ids(const IdPairSet& pairs,
                                      const std::vector<IdInstance>& codomain);

std::string format_id_instance(const IdInstance& inst);
// Accepts the format produced by format_id_instance: tuples in parentheses
// inside braces, identifier tokens prefixed with '#', plain value tokens
// (which must not start with '#'); unary tuples may omit parentheses.
IdInstance parse_id_instance(const std::string& text, int id_arity, int val_arity);

}  // namespace relcap

#endif  // RELCAP_IDS_HPP
