#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "frozen_values.hpp"
#include "relcap/errors.hpp"
#include "relcap/lattice.hpp"

using namespace relcap;

namespace {

std::set<std::pair<std::string, std::string>> edge_labels(const HasseGraph& h) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [lo, hi] : h.edges)
    out.emplace(h.nodes[static_cast<std::size_t>(lo)], h.nodes[static_cast<std::size_t>(hi)]);
  return out;
}

}  // namespace

TEST_CASE("the built-in catalogs have the expected shape") {
  CHECK(binary_catalog().size() == 20);
  CHECK(ternary_catalog().size() == 8);

  const SchemaDesc& s6 = catalog_schema("S6");
  REQUIRE(s6.keys.size() == 1);
  CHECK(s6.keys[0].columns == std::vector<int>{1});
  REQUIRE(s6.inds.size() == 1);
  CHECK(s6.inds[0].lhs == std::vector<int>{1});
  CHECK(s6.inds[0].rhs == std::vector<int>{2});

  const CatalogEntry* s6_entry = find_catalog_entry("S6");
  REQUIRE(s6_entry != nullptr);
  CHECK(s6_entry->declared_class == GraphClass::Cycles);

  const CatalogEntry* s8 = find_catalog_entry("S8");
  REQUIRE(s8 != nullptr);
  CHECK(s8->equiv_kind == EquivKind::Logical);
  CHECK(s8->equivalent_to == "S6");

  const CatalogEntry* s10 = find_catalog_entry("S10");
  REQUIRE(s10 != nullptr);
  CHECK(s10->equiv_kind == EquivKind::Generic);
  CHECK(s10->equivalent_to == "S5");

  const SchemaDesc& t7 = catalog_schema("T7");
  REQUIRE(t7.keys.size() == 2);
  CHECK(t7.keys[0].columns == std::vector<int>{1});
  CHECK(t7.keys[1].columns == std::vector<int>{2, 3});

  CHECK(find_catalog_entry("S99") == nullptr);
  CHECK_THROWS_AS(catalog_schema("S99"), UsageError);
}

TEST_CASE("class representatives are the catalog entries that declare them") {
  for (const CatalogEntry& e : binary_catalog()) {
    if (!e.declared_class.has_value()) continue;
    CAPTURE(e.schema.name);
    CHECK(&class_representative(*e.declared_class) == &e.schema);
  }
}

TEST_CASE("all tabled equivalences hold through n=3") {
  for (const EquivalenceCheck& check : verify_table_equivalences(3)) {
    CAPTURE(check.left);
    CAPTURE(check.right);
    CHECK(check.ok);
    CHECK(check.detail.empty());
  }
  CHECK(verify_table_equivalences(3).size() == 11);  // eight literal + three swap
  CHECK_THROWS_AS(verify_table_equivalences(5), UsageError);
}

TEST_CASE("strong inclusion distinguishes strictness, equality, and failure") {
  std::vector<InclusionVerdict> chain =
      strong_inclusion(catalog_schema("S6"), catalog_schema("S3"), 0, 3);
  REQUIRE(chain.size() == 4);
  CHECK(chain[0] == InclusionVerdict::Equal);  // only the empty instance at n=0
  CHECK(chain[2] == InclusionVerdict::SubsetStrict);
  CHECK(chain[3] == InclusionVerdict::SubsetStrict);

  std::vector<InclusionVerdict> self =
      strong_inclusion(catalog_schema("S6"), catalog_schema("S8"), 0, 3);
  for (InclusionVerdict v : self) CHECK(v == InclusionVerdict::Equal);

  std::vector<InclusionVerdict> incomparable =
      strong_inclusion(catalog_schema("S4"), catalog_schema("S5"), 2, 2);
  CHECK(incomparable.front() == InclusionVerdict::NotSubset);

  CHECK_THROWS_AS(strong_inclusion(catalog_schema("S0"), catalog_schema("T0"), 0, 1),
                  UsageError);
}

TEST_CASE("the binary dominance diagram is the known nine-edge order") {
  HasseGraph h = build_binary_hasse(3);
  REQUIRE(h.nodes.size() == 9);
  REQUIRE(h.edges.size() == 9);
  std::set<std::pair<std::string, std::string>> expect{
      {"SYMM_DEG1", "SYMM"},          {"SYMM_DEG1", "CYCLES"},
      {"CYCLES", "PATHS_CYCLES"},     {"PATHS_CYCLES", "OUTDEG1"},
      {"OUTDEG1", "OUTDEG_LE1"},      {"OUTDEG_LE1", "SOURCE_SINK_FREE"},
      {"SYMM", "SOURCE_SINK_FREE"},   {"SOURCE_SINK_FREE", "SOURCE_FREE"},
      {"SOURCE_FREE", "DIGRAPH"},
  };
  CHECK(edge_labels(h) == expect);
  for (const std::string& evidence : h.edge_evidence) CHECK_FALSE(evidence.empty());
}

TEST_CASE("the binary diagram records its negative certificates") {
  HasseGraph h = build_binary_hasse(3);
  bool no_absolute = false;
  bool obstruction = false;
  for (const DominanceFact& f : h.facts) {
    if (f.kind == FactKind::NoAbsolute) {
      no_absolute = true;
      CHECK(f.lower == "SYMM");
      CHECK(f.upper == "OUTDEG_LE1");
      CHECK(f.minimal_c == 4);
    }
    if (f.kind == FactKind::Obstruction) {
      obstruction = true;
      CHECK(f.lower == "CYCLES");
      CHECK(f.upper == "SYMM");
    }
  }
  CHECK(no_absolute);
  CHECK(obstruction);
}

TEST_CASE("binary DOT output is byte-stable") {
  CHECK(export_dot(build_binary_hasse(3)) == frozen::kBinaryHasseDot);
  CHECK(export_dot(build_binary_hasse(3)) == export_dot(build_binary_hasse(3)));
}

TEST_CASE("restricted catalogs keep only their own comparabilities") {
  HasseGraph single = build_binary_hasse(3, {GraphClass::Digraph});
  CHECK(single.nodes == std::vector<std::string>{"DIGRAPH"});
  CHECK(single.edges.empty());

  HasseGraph pair = build_binary_hasse(3, {GraphClass::Symm, GraphClass::OutdegLe1});
  CHECK(pair.nodes.size() == 2);
  CHECK(pair.edges.empty());
}

TEST_CASE("the ternary diagram is the eight-node chain") {
  HasseGraph chain = build_ternary_chain(2);
  REQUIRE(chain.nodes.size() == 8);
  REQUIRE(chain.edges.size() == 7);
  std::set<std::pair<std::string, std::string>> expect{
      {"T3", "T2"}, {"T2", "T7"}, {"T7", "T1"}, {"T1", "T6"},
      {"T6", "T5"}, {"T5", "T4"}, {"T4", "T0"},
  };
  CHECK(edge_labels(chain) == expect);
  CHECK(export_dot(chain) == frozen::kTernaryChainDot);
  for (const std::string& evidence : chain.edge_evidence) CHECK_FALSE(evidence.empty());
}

TEST_CASE("the ternary chain shape needs no scan evidence") {
  // At n=0 every instance set is the singleton {{}}: scans cannot separate
  // anything, yet the constraint-implication facts fix the same chain.
  HasseGraph deferred = build_ternary_chain(0);
  CHECK(edge_labels(deferred) == edge_labels(build_ternary_chain(2)));
  bool has_strict_scan = false;
  for (const DominanceFact& f : deferred.facts)
    if (f.kind == FactKind::StrongInclusion) has_strict_scan = true;
  CHECK_FALSE(has_strict_scan);
  CHECK_THROWS_AS(build_ternary_chain(4), UsageError);
}

TEST_CASE("the single-key to three-key edge rests on a mapping plus counts") {
  HasseGraph chain = build_ternary_chain(2);
  bool mapping = false;
  bool count_strict = false;
  for (const DominanceFact& f : chain.facts) {
    if (f.lower != "T1" || f.upper != "T6") continue;
    if (f.kind == FactKind::Mapping) mapping = true;
    if (f.kind == FactKind::CountStrict) count_strict = true;
  }
  CHECK(mapping);
  CHECK(count_strict);
}

TEST_CASE("under-scaled verification is rejected, not absorbed") {
  // Scanning only n <= 2 finds every cycle union symmetric, which collides
  // with the pinned 3-cycle obstruction; the builder must refuse to blend
  // contradictory evidence into one diagram.
  CHECK_THROWS_AS(build_binary_hasse(2), ConsistencyError);
}

TEST_CASE("facts format with their direction and evidence") {
  HasseGraph h = build_binary_hasse(3);
  REQUIRE_FALSE(h.facts.empty());
  bool saw_arrow = false;
  for (const DominanceFact& f : h.facts) {
    std::string line = format_fact(f);
    if (line.find(" -> ") != std::string::npos) saw_arrow = true;
    CHECK(line.find(f.lower) != std::string::npos);
    CHECK(line.find(f.upper) != std::string::npos);
  }
  CHECK(saw_arrow);
}

TEST_CASE("reports and listings carry the catalog content") {
  std::string report = hasse_report(build_binary_hasse(3));
  CHECK(report.find("nodes: 9, edges: 9") != std::string::npos);
  CHECK(report.find("SOURCE_FREE -> DIGRAPH") != std::string::npos);

  std::string listing = catalog_listing();
  CHECK(listing.find("S6") != std::string::npos);
  CHECK(listing.find("CYCLES") != std::string::npos);
  CHECK(listing.find("T7") != std::string::npos);

  std::string text = schema_to_text(catalog_schema("S6"));
  CHECK(text.find("name: S6") != std::string::npos);
  CHECK(text.find("arity: 2") != std::string::npos);
  CHECK(text.find("keys: {1}") != std::string::npos);
  CHECK(text.find("R[1] c R[2]") != std::string::npos);
}
