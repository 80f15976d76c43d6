#ifndef RELCAP_LATTICE_HPP
#define RELCAP_LATTICE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcap/enumeration.hpp"
#include "relcap/relmodel.hpp"

namespace relcap {

enum class EquivKind { None, Logical, Generic };

struct CatalogEntry {
  SchemaDesc schema;
  std::optional<GraphClass> declared_class;  // only on class representatives
  std::string equivalent_to;                 // earlier schema name, or empty
  EquivKind equiv_kind = EquivKind::None;
};

// The twenty binary schemas S0..S19 and the eight key-only ternary schemas
// T0..T7, in declaration order.
const std::vector<CatalogEntry>& binary_catalog();
const std::vector<CatalogEntry>& ternary_catalog();

const CatalogEntry* find_catalog_entry(const std::string& name);
const SchemaDesc& catalog_schema(const std::string& name);  // UsageError if unknown
const SchemaDesc& class_representative(GraphClass cls);

struct EquivalenceCheck {
  std::string left, right;
  EquivKind kind = EquivKind::Logical;
  int n_max = 0;
  bool ok = false;
  std::string detail;  // diff description when !ok
};

// Checks every declared equivalence of the binary catalog: logical pairs by
// instance-set equality, swap pairs by an explicit two-way bijection.
std::vector<EquivalenceCheck> verify_table_equivalences(int n_max, EnumLimits limits = {});

enum class InclusionVerdict { SubsetStrict, Equal, NotSubset };
std::string to_string(InclusionVerdict v);

// Per-n comparison of instance sets over domains of size n_min..n_max.
std::vector<InclusionVerdict> strong_inclusion(const SchemaDesc& lower, const SchemaDesc& upper,
                                               int n_min, int n_max, EnumLimits limits = {});

enum class FactKind {
  LogicalInclusion,   // lower's instances are upper's instances at every tested n
  StrongInclusion,    // as above, strictly at the largest tested n
  Mapping,            // an explicit verified injective generic mapping
  CountStrict,        // upper's count exceeds lower's from minimal_c on
  NoAbsolute,         // lower's count exceeds upper's from minimal_c on: no dominance
  Obstruction         // automorphism certificate refuting any generic injection
};
std::string to_string(FactKind k);

struct DominanceFact {
  std::string lower, upper;
  FactKind kind = FactKind::StrongInclusion;
  std::string evidence;  // mapping name, certificate summary, or note
  int minimal_c = -1;    // CountStrict / NoAbsolute threshold
  int verified_up_to_n = 0;
};
std::string format_fact(const DominanceFact& f);

struct HasseGraph {
  std::vector<std::string> nodes;               // fixed label order
  std::vector<std::pair<int, int>> edges;       // (lower index, upper index), covering pairs
  std::vector<std::string> edge_evidence;       // per-edge evidence summary
  std::vector<DominanceFact> facts;             // full evidence record, incl. negatives
};

// Assembles the order over the graph-class representatives from re-checkable
// evidence (inclusion scans, verified mappings, exact count comparisons,
// the automorphism obstruction), then transitively reduces it.
// ConsistencyError on conflicting evidence.
HasseGraph build_binary_hasse(int n_verify, std::vector<GraphClass> classes = all_graph_classes(),
                              EnumLimits limits = {});

// The eight key-only ternary schemas form a single chain.
HasseGraph build_ternary_chain(int n_verify, EnumLimits limits = {});

// Deterministic DOT rendering; nodes in label order, edges lower -> upper.
std::string export_dot(const HasseGraph& h);

// Structured text: every fact with its evidence kind and verified bound.
std::string hasse_report(const HasseGraph& h);

// One line per catalog entry: name, constraints, class or equivalence note.
std::string catalog_listing();
std::string schema_to_text(const SchemaDesc& schema);

}  // namespace relcap

#endif  // RELCAP_LATTICE_HPP
