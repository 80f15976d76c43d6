#include "relcap/mappings.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "relcap/errors.hpp"
#include "relcap/lattice.hpp"

namespace relcap {

namespace {

constexpr Value kTagConstantBase = 100;

const SchemaDesc& unary_schema() {
  static const SchemaDesc schema{"U1", 1, {}, {}};
  return schema;
}

std::set<Value> column_values(const Instance& inst, int col) {
  std::set<Value> out;
  for (const Tuple& t : inst.tuples()) out.insert(t.col(col));
  return out;
}

std::vector<Value> set_difference(const std::set<Value>& a, const std::set<Value>& b) {
  std::vector<Value> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SourceInstance SourceInstance::single(Instance inst) {
  SourceInstance s;
  s.rels.push_back(std::move(inst));
  return s;
}

MappingEntry map_swap_columns(const std::string& source_name, const std::string& target_name) {
  static const std::vector<std::pair<std::string, std::string>> swap_pairs = {
      {"S1", "S2"}, {"S5", "S10"}, {"S7", "S11"}};
  bool known = false;
  for (const auto& [a, b] : swap_pairs)
    if ((source_name == a && target_name == b) || (source_name == b && target_name == a))
      known = true;
  if (!known)
    throw UsageError("not a swap-equivalent pair: " + source_name + ", " + target_name);

  MappingEntry e;
  e.name = "swap";
  e.source.schema = catalog_schema(source_name);
  e.target = catalog_schema(target_name);
  e.forward = [](const SourceInstance& s) {
    std::vector<Tuple> out;
    for (const Tuple& t : s.rels.at(0).tuples()) out.emplace_back(t.col(2), t.col(1));
    return Instance::of(2, std::move(out));
  };
  e.inverse_unchecked = [fwd = e.forward](const Instance& image) {
    return SourceInstance::single(fwd(SourceInstance::single(image)));
  };
  return e;
}

MappingEntry map_outdegle1_to_ssfree() {
  MappingEntry e;
  e.name = "m";
  e.source.schema = catalog_schema("S5");
  e.target = catalog_schema("S3");
  e.forward = [](const SourceInstance& s) {
    const Instance& inst = s.rels.at(0);
    std::set<Value> col1 = column_values(inst, 1);
    std::set<Value> col2 = column_values(inst, 2);
    std::vector<Value> sources = set_difference(col1, col2);
    std::vector<Value> sinks = set_difference(col2, col1);
    std::vector<Tuple> out(inst.tuples().begin(), inst.tuples().end());
    for (Value x : sources) out.emplace_back(x, x);
    for (Value y : sinks)
      for (Value x : sources) out.emplace_back(y, x);
    return Instance::of(2, std::move(out));
  };
  e.inverse_unchecked = [](const Instance& image) {
    std::map<Value, int> outdeg;
    for (const Tuple& t : image.tuples()) ++outdeg[t.col(1)];
    // Added self-loops mark the original sources; those nodes kept their one
    // original outgoing edge, while nodes that always had a self-loop have no
    // second one.
    std::set<Value> sources;
    for (const Tuple& t : image.tuples())
      if (t.col(1) == t.col(2) && outdeg[t.col(1)] >= 2) sources.insert(t.col(1));
    std::set<Value> sinks;
    for (const Tuple& t : image.tuples())
      if (sources.count(t.col(2)) != 0 && t.col(1) != t.col(2)) sinks.insert(t.col(1));
    std::vector<Tuple> out;
    for (const Tuple& t : image.tuples()) {
      bool added_loop = t.col(1) == t.col(2) && sources.count(t.col(1)) != 0;
      bool added_back_edge = sinks.count(t.col(1)) != 0 && sources.count(t.col(2)) != 0;
      if (!added_loop && !added_back_edge) out.push_back(t);
    }
    return SourceInstance::single(Instance::of(2, std::move(out)));
  };
  return e;
}

MappingEntry map_close_sinks() {
  MappingEntry e;
  e.name = "close_sinks";
  e.source.schema = catalog_schema("S15");
  e.target = catalog_schema("S7");
  e.forward = [](const SourceInstance& s) {
    const Instance& inst = s.rels.at(0);
    std::set<Value> col1 = column_values(inst, 1);
    std::set<Value> col2 = column_values(inst, 2);
    std::vector<Tuple> out(inst.tuples().begin(), inst.tuples().end());
    for (Value x : set_difference(col2, col1)) out.emplace_back(x, x);
    return Instance::of(2, std::move(out));
  };
  e.inverse_unchecked = [](const Instance& image) {
    // A self-loop was added at a sink, which kept its one original incoming
    // edge; a loop that was already present is its node's only incoming edge.
    std::vector<Tuple> out;
    for (const Tuple& t : image.tuples()) {
      if (t.col(1) == t.col(2)) {
        bool other_incoming = false;
        for (const Tuple& u : image.tuples())
          if (u.col(2) == t.col(2) && u.col(1) != t.col(1)) other_incoming = true;
        if (other_incoming) continue;
      }
      out.push_back(t);
    }
    return SourceInstance::single(Instance::of(2, std::move(out)));
  };
  return e;
}

MappingEntry map_unary_tagging(int k) {
  if (k < 1) throw UsageError("tagging needs at least one unary relation");
  MappingEntry e;
  e.name = "tagging" + std::to_string(k);
  e.source.unary_family = k;
  e.target = catalog_schema("S0");
  for (int j = 0; j < k; ++j) e.constants.push_back(kTagConstantBase + j);
  e.forward = [k](const SourceInstance& s) {
    if (static_cast<int>(s.rels.size()) != k)
      throw UsageError("expected " + std::to_string(k) + " unary components");
    std::vector<Tuple> out;
    for (int j = 0; j < k; ++j)
      for (const Tuple& t : s.rels[static_cast<std::size_t>(j)].tuples()) {
        Value v = t.col(1);
        if (v >= kTagConstantBase && v < kTagConstantBase + k)
          throw UsageError("data value collides with a tagging constant");
        out.emplace_back(v, kTagConstantBase + j);
      }
    return Instance::of(2, std::move(out));
  };
  e.inverse_unchecked = [k](const Instance& image) {
    SourceInstance s;
    s.rels.assign(static_cast<std::size_t>(k), Instance::empty(1));
    std::vector<std::vector<Tuple>> members(static_cast<std::size_t>(k));
    for (const Tuple& t : image.tuples()) {
      int j = t.col(2) - kTagConstantBase;
      if (j < 0 || j >= k) throw RecoveryError("pair tagged with an unknown constant");
      members[static_cast<std::size_t>(j)].push_back(Tuple::unary(t.col(1)));
    }
    for (int j = 0; j < k; ++j)
      s.rels[static_cast<std::size_t>(j)] = Instance::of(1, std::move(members[static_cast<std::size_t>(j)]));
    return s;
  };
  return e;
}

MappingEntry map_t1_to_t6() {
  MappingEntry e;
  e.name = "f";
  e.source.schema = catalog_schema("T1");
  e.target = catalog_schema("T6");
  e.forward = [](const SourceInstance& s) {
    const Instance& inst = s.rels.at(0);
    // First column is a key, so it indexes the remaining two columns.
    std::map<Value, std::pair<Value, Value>> row;
    for (const Tuple& t : inst.tuples()) {
      if (!row.emplace(t.col(1), std::make_pair(t.col(2), t.col(3))).second)
        throw UsageError("first column is not a key");
    }
    std::vector<Tuple> out;
    for (const Tuple& t : inst.tuples()) {
      Value x = t.col(1), y = t.col(2), z = t.col(3);
      // Third column of the row keyed by y, when that row exists; undefined
      // compares unequal to every value.
      std::optional<Value> r;
      if (auto it = row.find(y); it != row.end()) r = it->second.second;
      bool r_is_x = r.has_value() && *r == x;
      if (x == y && y == z) {
        out.emplace_back(x, x, x);
      } else if (x == y) {
        out.emplace_back(x, x, z);
      } else if (x == z && !r_is_x) {
        out.emplace_back(x, y, x);
      } else if (y == z && !r_is_x) {
        out.emplace_back(x, y, x);
        out.emplace_back(x, x, y);
      } else if (!r_is_x) {
        out.emplace_back(x, y, x);
        out.emplace_back(x, x, z);
      } else if (x == z) {
        out.emplace_back(x, y, y);
        out.emplace_back(x, x, x);
      } else if (y == z) {
        out.emplace_back(x, y, y);
      } else {
        out.emplace_back(x, y, y);
        out.emplace_back(x, x, z);
      }
    }
    return Instance::of(3, std::move(out));
  };
  e.inverse_unchecked = [](const Instance& image) {
    std::map<Value, std::vector<Tuple>> groups;
    for (const Tuple& t : image.tuples()) groups[t.col(1)].push_back(t);
    std::vector<Tuple> out;
    for (const auto& [x, group] : groups) {
      if (group.size() == 1) {
        const Tuple& t = group.front();
        Value b = t.col(2), c = t.col(3);
        if (b == x)
          out.emplace_back(x, x, c);
        else if (c == x)
          out.emplace_back(x, b, x);
        else if (b == c)
          out.emplace_back(x, b, b);
        else
          throw RecoveryError("unrecognized single-triple group");
      } else if (group.size() == 2) {
        std::optional<Value> gamma;  // from the triple whose middle value is x
        std::optional<Value> delta;  // middle value of the other triple
        for (const Tuple& t : group) {
          if (t.col(2) == x) {
            if (gamma.has_value()) throw RecoveryError("ambiguous two-triple group");
            gamma = t.col(3);
          } else {
            if (t.col(3) != x && t.col(3) != t.col(2))
              throw RecoveryError("unrecognized two-triple group");
            delta = t.col(2);
          }
        }
        if (!gamma.has_value() || !delta.has_value())
          throw RecoveryError("unrecognized two-triple group");
        out.emplace_back(x, *delta, *gamma);
      } else {
        throw RecoveryError("oversized first-column group");
      }
    }
    return SourceInstance::single(Instance::of(3, std::move(out)));
  };
  return e;
}

MappingEntry map_prime_encode() {
  MappingEntry e;
  e.name = "prime_encode";
  e.source.schema = catalog_schema("S0");
  e.target = SchemaDesc{"V11", 1, {}, {}};
  e.expected_generic = false;
  e.forward = [](const SourceInstance& s) {
    std::vector<Tuple> out;
    for (const Tuple& t : s.rels.at(0).tuples()) {
      // Treat value i as the natural number i+1 and encode the pair as
      // 2^(x+1) * 3^(y+1), shifted back into value space.
      std::int64_t code = 1;
      for (Value i = 0; i <= t.col(1); ++i) code *= 2;
      for (Value i = 0; i <= t.col(2); ++i) code *= 3;
      if (code > (1 << 30)) throw ResourceError(static_cast<std::uint64_t>(code), 1u << 30);
      out.push_back(Tuple::unary(static_cast<Value>(code - 1)));
    }
    return Instance::of(1, std::move(out));
  };
  return e;
}

const std::vector<MappingEntry>& mapping_catalog() {
  static const std::vector<MappingEntry> catalog = [] {
    std::vector<MappingEntry> m;
    m.push_back(map_swap_columns());
    m.push_back(map_outdegle1_to_ssfree());
    m.push_back(map_close_sinks());
    m.push_back(map_unary_tagging(2));
    m.push_back(map_t1_to_t6());
    m.push_back(map_prime_encode());
    return m;
  }();
  return catalog;
}

const MappingEntry& find_mapping(const std::string& name) {
  for (const MappingEntry& e : mapping_catalog())
    if (e.name == name) return e;
  throw UsageError("unknown mapping: " + name);
}

std::vector<SourceInstance> enumerate_source(const SourceSpace& space, const DomainSpec& dom,
                                             EnumLimits limits) {
  std::vector<SourceInstance> out;
  if (space.unary_family <= 0) {
    for (Instance& inst : collect_instances(space.schema, dom, limits))
      out.push_back(SourceInstance::single(std::move(inst)));
    return out;
  }
  const int k = space.unary_family;
  if (static_cast<std::uint64_t>(dom.size) * static_cast<std::uint64_t>(k) > 24)
    throw ResourceError(~std::uint64_t(0), limits.node_budget);
  std::vector<Instance> component = collect_instances(unary_schema(), dom, limits);
  std::vector<std::size_t> odo(static_cast<std::size_t>(k), 0);
  while (true) {
    SourceInstance s;
    for (std::size_t idx : odo) s.rels.push_back(component[idx]);
    out.push_back(std::move(s));
    int pos = k - 1;
    while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == component.size()) {
      odo[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

bool source_satisfies(const SourceSpace& space, const SourceInstance& inst) {
  if (space.unary_family > 0) {
    if (static_cast<int>(inst.rels.size()) != space.unary_family) return false;
    for (const Instance& rel : inst.rels)
      if (rel.arity() != 1) return false;
    return true;
  }
  return inst.rels.size() == 1 && satisfies_schema(inst.rels.front(), space.schema);
}

SourceInstance permute_source(const SourceInstance& inst, const Permutation& p) {
  SourceInstance out;
  for (const Instance& rel : inst.rels) out.rels.push_back(apply_permutation(rel, p));
  return out;
}

Instance apply_mapping(const MappingEntry& map, const SourceInstance& inst) {
  if (!source_satisfies(map.source, inst))
    throw UsageError("input violates the source constraints of mapping " + map.name);
  Instance image = map.forward(inst);
  if (!satisfies_schema(image, map.target))
    throw ConsistencyError("image of mapping " + map.name + " violates its target schema");
  return image;
}

Instance apply_mapping(const MappingEntry& map, const Instance& inst) {
  if (map.source.unary_family > 0)
    throw UsageError("mapping " + map.name + " takes a family of unary relations");
  return apply_mapping(map, SourceInstance::single(inst));
}

SourceInstance invert_mapping(const MappingEntry& map, const Instance& image) {
  if (!map.has_inverse()) throw UsageError("mapping " + map.name + " has no inverse");
  SourceInstance recovered = map.inverse_unchecked(image);
  Instance round_trip = Instance::empty(image.arity());
  try {
    round_trip = apply_mapping(map, recovered);
  } catch (const RecoveryError&) {
    throw;
  } catch (const std::runtime_error&) {
    throw RecoveryError("reconstructed preimage is not a valid source instance");
  }
  if (!(round_trip == image))
    throw RecoveryError("input is not in the image of mapping " + map.name);
  return recovered;
}

}  // namespace relcap
