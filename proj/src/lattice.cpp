#include "relcap/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "relcap/counting.hpp"
#include "relcap/equivariance.hpp"
#include "relcap/errors.hpp"
#include "relcap/mappings.hpp"
#include "relcap/textio.hpp"

namespace relcap {

namespace {

const std::vector<int> kCol1{1};
const std::vector<int> kCol2{2};

InclusionDependency ind(std::vector<int> lhs, std::vector<int> rhs) {
  return InclusionDependency{std::move(lhs), std::move(rhs)};
}

CatalogEntry entry(std::string name, int arity, std::vector<KeyConstraint> keys,
                   std::vector<InclusionDependency> inds,
                   std::optional<GraphClass> cls = std::nullopt, std::string equivalent_to = "",
                   EquivKind kind = EquivKind::None) {
  CatalogEntry e;
  e.schema = SchemaDesc{std::move(name), arity, std::move(keys), std::move(inds)};
  validate_schema(e.schema);
  e.declared_class = cls;
  e.equivalent_to = std::move(equivalent_to);
  e.equiv_kind = kind;
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& binary_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    const InclusionDependency i12 = ind(kCol1, kCol2);
    const InclusionDependency i21 = ind(kCol2, kCol1);
    const InclusionDependency isym = ind({1, 2}, {2, 1});
    const KeyConstraint k1{kCol1};
    const KeyConstraint k2{kCol2};
    std::vector<CatalogEntry> t;
    t.push_back(entry("S0", 2, {}, {}, GraphClass::Digraph));
    t.push_back(entry("S1", 2, {}, {i12}, GraphClass::SourceFree));
    t.push_back(entry("S2", 2, {}, {i21}, std::nullopt, "S1", EquivKind::Generic));
    t.push_back(entry("S3", 2, {}, {i12, i21}, GraphClass::SourceSinkFree));
    t.push_back(entry("S4", 2, {}, {isym}, GraphClass::Symm));
    t.push_back(entry("S5", 2, {k1}, {}, GraphClass::OutdegLe1));
    t.push_back(entry("S6", 2, {k1}, {i12}, GraphClass::Cycles));
    t.push_back(entry("S7", 2, {k1}, {i21}, GraphClass::Outdeg1));
    t.push_back(entry("S8", 2, {k1}, {i12, i21}, std::nullopt, "S6", EquivKind::Logical));
    t.push_back(entry("S9", 2, {k1}, {isym}, GraphClass::SymmDeg1));
    t.push_back(entry("S10", 2, {k2}, {}, std::nullopt, "S5", EquivKind::Generic));
    t.push_back(entry("S11", 2, {k2}, {i12}, std::nullopt, "S7", EquivKind::Generic));
    t.push_back(entry("S12", 2, {k2}, {i21}, std::nullopt, "S6", EquivKind::Logical));
    t.push_back(entry("S13", 2, {k2}, {i12, i21}, std::nullopt, "S6", EquivKind::Logical));
    t.push_back(entry("S14", 2, {k2}, {isym}, std::nullopt, "S9", EquivKind::Logical));
    t.push_back(entry("S15", 2, {k1, k2}, {}, GraphClass::PathsCycles));
    t.push_back(entry("S16", 2, {k1, k2}, {i12}, std::nullopt, "S6", EquivKind::Logical));
    t.push_back(entry("S17", 2, {k1, k2}, {i21}, std::nullopt, "S6", EquivKind::Logical));
    t.push_back(entry("S18", 2, {k1, k2}, {i12, i21}, std::nullopt, "S6", EquivKind::Logical));
    t.push_back(entry("S19", 2, {k1, k2}, {isym}, std::nullopt, "S9", EquivKind::Logical));
    return t;
  }();
  return catalog;
}

const std::vector<CatalogEntry>& ternary_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> t;
    t.push_back(entry("T0", 3, {}, {}));
    t.push_back(entry("T1", 3, {KeyConstraint{{1}}}, {}));
    t.push_back(entry("T2", 3, {KeyConstraint{{1}}, KeyConstraint{{2}}}, {}));
    t.push_back(
        entry("T3", 3, {KeyConstraint{{1}}, KeyConstraint{{2}}, KeyConstraint{{3}}}, {}));
    t.push_back(entry("T4", 3, {KeyConstraint{{1, 2}}}, {}));
    t.push_back(entry("T5", 3, {KeyConstraint{{1, 2}}, KeyConstraint{{1, 3}}}, {}));
    t.push_back(entry(
        "T6", 3, {KeyConstraint{{1, 2}}, KeyConstraint{{1, 3}}, KeyConstraint{{2, 3}}}, {}));
    t.push_back(entry("T7", 3, {KeyConstraint{{1}}, KeyConstraint{{2, 3}}}, {}));
    return t;
  }();
  return catalog;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : binary_catalog())
    if (e.schema.name == name) return &e;
  for (const CatalogEntry& e : ternary_catalog())
    if (e.schema.name == name) return &e;
  return nullptr;
}

const SchemaDesc& catalog_schema(const std::string& name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (e == nullptr) throw UsageError("unknown catalog schema: " + name);
  return e->schema;
}

const SchemaDesc& class_representative(GraphClass cls) {
  for (const CatalogEntry& e : binary_catalog())
    if (e.declared_class == cls) return e.schema;
  throw UsageError("class without representative");
}

namespace {

std::vector<Instance> instance_set(const SchemaDesc& schema, int n, EnumLimits limits) {
  return collect_instances(schema, DomainSpec::of(n), limits);
}

std::string first_difference(const std::vector<Instance>& left,
                             const std::vector<Instance>& right, const std::string& left_name,
                             const std::string& right_name) {
  std::set<Instance> ls(left.begin(), left.end());
  std::set<Instance> rs(right.begin(), right.end());
  for (const Instance& inst : left)
    if (rs.count(inst) == 0)
      return left_name + " has " + format_instance(inst) + " missing from " + right_name;
  for (const Instance& inst : right)
    if (ls.count(inst) == 0)
      return right_name + " has " + format_instance(inst) + " missing from " + left_name;
  return "";
}

}  // namespace

std::vector<EquivalenceCheck> verify_table_equivalences(int n_max, EnumLimits limits) {
  if (n_max > 4) throw UsageError("equivalence verification is bounded at n=4");
  std::vector<EquivalenceCheck> out;
  for (const CatalogEntry& e : binary_catalog()) {
    if (e.equiv_kind == EquivKind::None) continue;
    EquivalenceCheck check;
    check.left = e.schema.name;
    check.right = e.equivalent_to;
    check.kind = e.equiv_kind;
    check.n_max = n_max;
    check.ok = true;
    const SchemaDesc& left = e.schema;
    const SchemaDesc& right = catalog_schema(e.equivalent_to);
    for (int n = 0; n <= n_max && check.ok; ++n) {
      std::vector<Instance> ls = instance_set(left, n, limits);
      std::vector<Instance> rs = instance_set(right, n, limits);
      if (e.equiv_kind == EquivKind::Logical) {
        if (ls != rs) {
          check.ok = false;
          check.detail = "n=" + std::to_string(n) + ": " +
                         first_difference(ls, rs, check.left, check.right);
        }
        continue;
      }
      // Swap-equivalent pair: the column transposition must be a bijection
      // between the two instance sets.
      MappingEntry swap = map_swap_columns(left.name, right.name);
      std::vector<Instance> image;
      image.reserve(ls.size());
      for (const Instance& inst : ls) image.push_back(apply_mapping(swap, inst));
      std::sort(image.begin(), image.end());
      if (image != rs) {
        check.ok = false;
        check.detail = "n=" + std::to_string(n) + ": swap image differs: " +
                       first_difference(image, rs, "swap(" + check.left + ")", check.right);
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::string to_string(InclusionVerdict v) {
  switch (v) {
    case InclusionVerdict::SubsetStrict: return "SUBSET_STRICT";
    case InclusionVerdict::Equal: return "EQUAL";
    case InclusionVerdict::NotSubset: return "NOT_SUBSET";
  }
  throw UsageError("unknown verdict");
}

std::vector<InclusionVerdict> strong_inclusion(const SchemaDesc& lower, const SchemaDesc& upper,
                                               int n_min, int n_max, EnumLimits limits) {
  if (lower.arity != upper.arity) throw UsageError("inclusion check needs equal arities");
  if (n_min < 0 || n_max < n_min) throw UsageError("bad domain range");
  std::vector<InclusionVerdict> out;
  for (int n = n_min; n <= n_max; ++n) {
    DomainSpec dom = DomainSpec::of(n);
    bool all_in = true;
    InstanceStream lower_stream = enumerate_instances(lower, dom, limits);
    while (auto inst = lower_stream.next()) {
      if (!satisfies_schema(*inst, upper)) {
        all_in = false;
        break;
      }
    }
    if (!all_in) {
      out.push_back(InclusionVerdict::NotSubset);
      continue;
    }
    // Subset holds; decide strictness by hunting for an upper instance
    // outside the lower set.  Lazy streaming keeps unconstrained upper
    // schemas affordable: a witness appears early or not at all.
    bool strict = false;
    InstanceStream upper_stream = enumerate_instances(upper, dom, limits);
    while (auto inst = upper_stream.next()) {
      if (!satisfies_schema(*inst, lower)) {
        strict = true;
        break;
      }
    }
    out.push_back(strict ? InclusionVerdict::SubsetStrict : InclusionVerdict::Equal);
  }
  return out;
}

std::string to_string(FactKind k) {
  switch (k) {
    case FactKind::LogicalInclusion: return "LOGICAL_INCLUSION";
    case FactKind::StrongInclusion: return "STRONG_INCLUSION";
    case FactKind::Mapping: return "MAPPING";
    case FactKind::CountStrict: return "COUNT_STRICT";
    case FactKind::NoAbsolute: return "NO_ABSOLUTE";
    case FactKind::Obstruction: return "OBSTRUCTION";
  }
  throw UsageError("unknown fact kind");
}

std::string format_fact(const DominanceFact& f) {
  std::ostringstream os;
  os << to_string(f.kind) << " " << f.lower;
  bool negative = f.kind == FactKind::NoAbsolute || f.kind == FactKind::Obstruction;
  os << (negative ? " -/-> " : " -> ") << f.upper;
  if (!f.evidence.empty()) os << ": " << f.evidence;
  if (f.minimal_c >= 0) os << " [from n=" << f.minimal_c << "]";
  if (f.verified_up_to_n > 0) os << " [verified up to n=" << f.verified_up_to_n << "]";
  return os.str();
}

namespace {

// Key X implies key Y whenever X ⊆ Y; an IND is implied only by itself.
bool syntactically_implies(const SchemaDesc& stronger, const SchemaDesc& weaker) {
  for (const KeyConstraint& want : weaker.keys) {
    bool have = false;
    for (const KeyConstraint& key : stronger.keys)
      if (std::includes(want.columns.begin(), want.columns.end(), key.columns.begin(),
                        key.columns.end()))
        have = true;
    if (!have) return false;
  }
  for (const InclusionDependency& want : weaker.inds) {
    bool have = false;
    for (const InclusionDependency& d : stronger.inds)
      if (d.lhs == want.lhs && d.rhs == want.rhs) have = true;
    if (!have) return false;
  }
  return true;
}

struct NodeSpec {
  std::string label;
  const SchemaDesc* schema;
  std::optional<CountedClass> counted;
};

std::string verify_mapping_evidence(const MappingEntry& map, int n_verify, EnumLimits limits) {
  for (int n = 0; n <= n_verify; ++n) {
    DomainSpec dom = DomainSpec::of(n);
    GenericityResult gen = check_genericity(map, dom, limits);
    if (!gen.pass)
      throw ConsistencyError("mapping " + map.name + " is not generic at n=" +
                             std::to_string(n));
    InjectivityResult inj = check_injectivity(map, dom, limits);
    if (!inj.pass)
      throw ConsistencyError("mapping " + map.name + " is not injective at n=" +
                             std::to_string(n));
    for (const SourceInstance& inst : enumerate_source(map.source, dom, limits)) {
      Instance image = apply_mapping(map, inst);
      if (!(invert_mapping(map, image) == inst))
        throw ConsistencyError("mapping " + map.name + " round trip failed at n=" +
                               std::to_string(n));
    }
  }
  return "mapping " + map.name + " injective+generic+invertible over n<=" +
         std::to_string(n_verify);
}

HasseGraph assemble(const std::vector<NodeSpec>& nodes, std::vector<DominanceFact> facts) {
  const std::size_t count = nodes.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(nodes[i].label, i);

  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) leq[i][i] = true;
  auto positive = [](FactKind k) {
    return k == FactKind::LogicalInclusion || k == FactKind::StrongInclusion ||
           k == FactKind::Mapping;
  };
  for (const DominanceFact& f : facts)
    if (positive(f.kind)) leq[index.at(f.lower)][index.at(f.upper)] = true;

  // Reflexive-transitive closure.
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t i = 0; i < count; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < count; ++j)
          if (leq[k][j]) leq[i][j] = true;

  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw ConsistencyError("dominance provable in both directions between " +
                               nodes[i].label + " and " + nodes[j].label);
  for (const DominanceFact& f : facts)
    if (!positive(f.kind) && f.kind != FactKind::CountStrict &&
        leq[index.at(f.lower)][index.at(f.upper)])
      throw ConsistencyError("negative evidence contradicts a derived dominance: " +
                             f.lower + " vs " + f.upper);

  HasseGraph h;
  for (const NodeSpec& n : nodes) h.nodes.push_back(n.label);
  h.facts = std::move(facts);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < count && covering; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) covering = false;
      if (!covering) continue;
      std::string evidence;
      for (const DominanceFact& f : h.facts) {
        if (f.lower != nodes[i].label || f.upper != nodes[j].label) continue;
        if (f.kind == FactKind::NoAbsolute || f.kind == FactKind::Obstruction) continue;
        if (!evidence.empty()) evidence += "; ";
        evidence += format_fact(f);
      }
      h.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      h.edge_evidence.push_back(evidence);
    }
  return h;
}

void add_scan_and_syntactic_facts(const std::vector<NodeSpec>& nodes, int n_verify,
                                  EnumLimits limits, std::vector<DominanceFact>& facts) {
  for (const NodeSpec& low : nodes)
    for (const NodeSpec& up : nodes) {
      if (low.label == up.label) continue;
      if (syntactically_implies(*low.schema, *up.schema)) {
        DominanceFact f;
        f.lower = low.label;
        f.upper = up.label;
        f.kind = FactKind::LogicalInclusion;
        f.evidence = "every constraint of " + up.schema->name + " is implied by " +
                     low.schema->name;
        facts.push_back(std::move(f));
      }
      std::vector<InclusionVerdict> verdicts =
          strong_inclusion(*low.schema, *up.schema, 0, n_verify, limits);
      bool subset_everywhere = true;
      for (InclusionVerdict v : verdicts)
        if (v == InclusionVerdict::NotSubset) subset_everywhere = false;
      if (subset_everywhere && verdicts.back() == InclusionVerdict::SubsetStrict) {
        DominanceFact f;
        f.lower = low.label;
        f.upper = up.label;
        f.kind = FactKind::StrongInclusion;
        f.evidence = low.schema->name + " instances form a strict subset of " +
                     up.schema->name + " instances";
        f.verified_up_to_n = n_verify;
        facts.push_back(std::move(f));
      }
    }
}

}  // namespace

HasseGraph build_binary_hasse(int n_verify, std::vector<GraphClass> classes, EnumLimits limits) {
  if (n_verify < 0) throw UsageError("negative verification bound");
  std::vector<NodeSpec> nodes;
  for (GraphClass cls : all_graph_classes()) {
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) continue;
    nodes.push_back(NodeSpec{to_string(cls), &class_representative(cls), counted_class(cls)});
  }
  auto present = [&](GraphClass cls) {
    return std::find(classes.begin(), classes.end(), cls) != classes.end();
  };

  std::vector<DominanceFact> facts;
  add_scan_and_syntactic_facts(nodes, n_verify, limits, facts);

  struct MappingEdge {
    MappingEntry entry;
    GraphClass lower, upper;
  };
  std::vector<MappingEdge> mapping_edges;
  if (present(GraphClass::OutdegLe1) && present(GraphClass::SourceSinkFree))
    mapping_edges.push_back(
        {map_outdegle1_to_ssfree(), GraphClass::OutdegLe1, GraphClass::SourceSinkFree});
  if (present(GraphClass::PathsCycles) && present(GraphClass::Outdeg1))
    mapping_edges.push_back({map_close_sinks(), GraphClass::PathsCycles, GraphClass::Outdeg1});
  for (const MappingEdge& edge : mapping_edges) {
    DominanceFact f;
    f.lower = to_string(edge.lower);
    f.upper = to_string(edge.upper);
    f.kind = FactKind::Mapping;
    f.evidence = verify_mapping_evidence(edge.entry, n_verify, limits);
    if (edge.entry.name == "close_sinks")
      f.evidence += "; plain set inclusion fails here (an open path end violates the "
                    "target), so the edge rests on the mapping";
    f.verified_up_to_n = n_verify;
    facts.push_back(std::move(f));
  }

  // Exact count separations: for every strictly included or mapped pair the
  // upper class eventually outcounts the lower one.
  const int growth_bound = 8;
  for (const NodeSpec& low : nodes)
    for (const NodeSpec& up : nodes) {
      if (low.label == up.label) continue;
      bool related = false;
      for (const DominanceFact& f : facts)
        if (f.lower == low.label && f.upper == up.label &&
            (f.kind == FactKind::StrongInclusion || f.kind == FactKind::Mapping))
          related = true;
      if (!related) continue;
      GrowthReport rep = compare_growth(*up.counted, *low.counted, growth_bound);
      if (!rep.minimal_c.has_value()) continue;
      DominanceFact f;
      f.lower = low.label;
      f.upper = up.label;
      f.kind = FactKind::CountStrict;
      f.evidence = "exact counts of " + up.label + " exceed " + low.label;
      f.minimal_c = *rep.minimal_c;
      f.verified_up_to_n = growth_bound;
      facts.push_back(std::move(f));
    }

  if (present(GraphClass::Symm) && present(GraphClass::OutdegLe1)) {
    GrowthReport rep =
        compare_growth(CountedClass::Symm, CountedClass::OutdegLe1, growth_bound);
    if (rep.minimal_c.has_value()) {
      DominanceFact f;
      f.lower = to_string(GraphClass::Symm);
      f.upper = to_string(GraphClass::OutdegLe1);
      f.kind = FactKind::NoAbsolute;
      f.evidence = "SYMM outcounts OUTDEG_LE1, so no injection into it can exist";
      f.minimal_c = *rep.minimal_c;
      f.verified_up_to_n = growth_bound;
      facts.push_back(std::move(f));
    }
  }

  if (present(GraphClass::Cycles) && present(GraphClass::Symm)) {
    Instance three_cycle = Instance::of(2, {Tuple(0, 1), Tuple(1, 2), Tuple(2, 0)});
    std::vector<Instance> candidates =
        find_image_candidates(three_cycle, {}, class_representative(GraphClass::Symm), limits);
    if (candidates.empty()) {
      DominanceFact f;
      f.lower = to_string(GraphClass::Cycles);
      f.upper = to_string(GraphClass::Symm);
      f.kind = FactKind::Obstruction;
      f.evidence = "no symmetric graph on a 3-value carrier shares the directed "
                   "3-cycle's automorphism group";
      f.verified_up_to_n = 3;
      facts.push_back(std::move(f));
    }
  }

  return assemble(nodes, std::move(facts));
}

HasseGraph build_ternary_chain(int n_verify, EnumLimits limits) {
  if (n_verify < 0) throw UsageError("negative verification bound");
  if (n_verify > 3) throw UsageError("ternary verification is bounded at n=3");
  std::vector<NodeSpec> nodes;
  for (const CatalogEntry& e : ternary_catalog())
    nodes.push_back(NodeSpec{e.schema.name, &e.schema, std::nullopt});

  std::vector<DominanceFact> facts;
  add_scan_and_syntactic_facts(nodes, n_verify, limits, facts);

  MappingEntry f_map = map_t1_to_t6();
  DominanceFact mapping_fact;
  mapping_fact.lower = "T1";
  mapping_fact.upper = "T6";
  mapping_fact.kind = FactKind::Mapping;
  mapping_fact.evidence = verify_mapping_evidence(f_map, n_verify, limits);
  mapping_fact.verified_up_to_n = n_verify;
  facts.push_back(std::move(mapping_fact));

  if (n_verify >= 2) {
    BigCount t6 = count_instances(catalog_schema("T6"), DomainSpec::of(n_verify), limits);
    BigCount t1 = formula_count(CountedClass::T1, n_verify);
    if (t6 > t1) {
      DominanceFact f;
      f.lower = "T1";
      f.upper = "T6";
      f.kind = FactKind::CountStrict;
      f.evidence = "enumerated T6 count " + t6.str() + " exceeds the T1 closed form " +
                   t1.str();
      f.minimal_c = n_verify;
      f.verified_up_to_n = n_verify;
      facts.push_back(std::move(f));
    }
  }

  const int crossover_bound = 12;
  int crossover = lower_bound_crossover(crossover_bound);
  if (crossover >= 0) {
    DominanceFact f;
    f.lower = "T1";
    f.upper = "T6";
    f.kind = FactKind::CountStrict;
    f.evidence = "exact rational lower bound on T6 stays above the T1 closed form";
    f.minimal_c = crossover;
    f.verified_up_to_n = crossover_bound;
    facts.push_back(std::move(f));
  }

  return assemble(nodes, std::move(facts));
}

std::string export_dot(const HasseGraph& h) {
  std::ostringstream os;
  os << "digraph dominance {\n";
  os << "  rankdir=BT;\n";
  for (const std::string& node : h.nodes) os << "  \"" << dot_escape(node) << "\";\n";
  for (const auto& [lo, hi] : h.edges)
    os << "  \"" << dot_escape(h.nodes[static_cast<std::size_t>(lo)]) << "\" -> \""
       << dot_escape(h.nodes[static_cast<std::size_t>(hi)]) << "\";\n";
  os << "}\n";
  return os.str();
}

std::string hasse_report(const HasseGraph& h) {
  std::ostringstream os;
  os << "nodes: " << h.nodes.size() << ", edges: " << h.edges.size() << "\n";
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    os << "edge " << h.nodes[static_cast<std::size_t>(h.edges[i].first)] << " -> "
       << h.nodes[static_cast<std::size_t>(h.edges[i].second)];
    if (!h.edge_evidence[i].empty()) os << "  [" << h.edge_evidence[i] << "]";
    os << "\n";
  }
  for (const DominanceFact& f : h.facts) os << "fact " << format_fact(f) << "\n";
  return os.str();
}

std::string schema_to_text(const SchemaDesc& schema) {
  std::ostringstream os;
  os << "name: " << schema.name << "\n";
  os << "arity: " << schema.arity << "\n";
  os << "keys:";
  if (schema.keys.empty()) os << " none";
  for (const KeyConstraint& key : schema.keys) {
    os << " {";
    for (std::size_t i = 0; i < key.columns.size(); ++i)
      os << (i > 0 ? "," : "") << key.columns[i];
    os << "}";
  }
  os << "\n";
  os << "inds:";
  if (schema.inds.empty()) os << " none";
  for (const InclusionDependency& d : schema.inds) {
    os << " R[";
    for (std::size_t i = 0; i < d.lhs.size(); ++i) os << (i > 0 ? "," : "") << d.lhs[i];
    os << "] c R[";
    for (std::size_t i = 0; i < d.rhs.size(); ++i) os << (i > 0 ? "," : "") << d.rhs[i];
    os << "]";
  }
  os << "\n";
  return os.str();
}

namespace {

std::string constraint_summary(const SchemaDesc& schema) {
  std::ostringstream os;
  if (schema.keys.empty() && schema.inds.empty()) return "no constraints";
  bool first = true;
  for (const KeyConstraint& key : schema.keys) {
    if (!first) os << ", ";
    first = false;
    os << "key{";
    for (std::size_t i = 0; i < key.columns.size(); ++i)
      os << (i > 0 ? "," : "") << key.columns[i];
    os << "}";
  }
  for (const InclusionDependency& d : schema.inds) {
    if (!first) os << ", ";
    first = false;
    os << "R[";
    for (std::size_t i = 0; i < d.lhs.size(); ++i) os << (i > 0 ? "," : "") << d.lhs[i];
    os << "] c R[";
    for (std::size_t i = 0; i < d.rhs.size(); ++i) os << (i > 0 ? "," : "") << d.rhs[i];
    os << "]";
  }
  return os.str();
}

void list_entry(std::ostringstream& os, const CatalogEntry& e) {
  os << e.schema.name << ": " << constraint_summary(e.schema);
  if (e.declared_class.has_value()) os << "  [class " << to_string(*e.declared_class) << "]";
  if (e.equiv_kind == EquivKind::Logical) os << "  [= " << e.equivalent_to << "]";
  if (e.equiv_kind == EquivKind::Generic) os << "  [=gen " << e.equivalent_to << "]";
  os << "\n";
}

}  // namespace

std::string catalog_listing() {
  std::ostringstream os;
  for (const CatalogEntry& e : binary_catalog()) list_entry(os, e);
  for (const CatalogEntry& e : ternary_catalog()) list_entry(os, e);
  return os.str();
}

}  // namespace relcap
