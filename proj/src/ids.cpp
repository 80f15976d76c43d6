#include "relcap/ids.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "relcap/enumeration.hpp"
#include "relcap/errors.hpp"
#include "relcap/textio.hpp"

namespace relcap {

bool operator<(const IdInstance& a, const IdInstance& b) {
  if (a.tuples.size() != b.tuples.size()) return a.tuples.size() < b.tuples.size();
  return a.tuples < b.tuples;
}

IdInstance IdInstance::of(int id_arity, int val_arity, std::vector<IdTuple> tuples) {
  if (id_arity < 0 || val_arity < 0 || id_arity + val_arity == 0)
    throw UsageError("bad double arity");
  for (const IdTuple& t : tuples)
    if (static_cast<int>(t.ids.size()) != id_arity ||
        static_cast<int>(t.values.size()) != val_arity)
      throw UsageError("tuple arity mismatch");
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  IdInstance inst;
  inst.id_arity = id_arity;
  inst.val_arity = val_arity;
  inst.tuples = std::move(tuples);
  return inst;
}

IdInstance IdInstance::empty(int id_arity, int val_arity) {
  return of(id_arity, val_arity, {});
}

std::vector<IdToken> IdInstance::idom() const {
  std::vector<IdToken> out;
  for (const IdTuple& t : tuples) out.insert(out.end(), t.ids.begin(), t.ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Value> IdInstance::value_adom() const {
  std::vector<Value> out;
  for (const IdTuple& t : tuples) out.insert(out.end(), t.values.begin(), t.values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* to_string(IdSchema s) {
  switch (s) {
    case IdSchema::KNone: return "K_none";
    case IdSchema::KId: return "K_id";
    case IdSchema::KVal: return "K_val";
    case IdSchema::KBoth: return "K_both";
    case IdSchema::V11: return "V11";
  }
  throw UsageError("unknown id schema");
}

std::optional<IdSchema> id_schema_from_string(std::string_view s) {
  for (IdSchema schema : all_id_schemas())
    if (s == to_string(schema)) return schema;
  return std::nullopt;
}

const std::vector<IdSchema>& all_id_schemas() {
  static const std::vector<IdSchema> all{IdSchema::KNone, IdSchema::KId, IdSchema::KVal,
                                         IdSchema::KBoth, IdSchema::V11};
  return all;
}

int id_arity_of(IdSchema s) { return s == IdSchema::V11 ? 0 : 1; }
int val_arity_of(IdSchema) { return 1; }

bool satisfies_id_schema(const IdInstance& inst, IdSchema s) {
  if (inst.id_arity != id_arity_of(s) || inst.val_arity != val_arity_of(s)) return false;
  bool key_on_ids = s == IdSchema::KId || s == IdSchema::KBoth;
  bool key_on_values = s == IdSchema::KVal || s == IdSchema::KBoth;
  if (key_on_ids) {
    std::set<std::vector<IdToken>> seen;
    for (const IdTuple& t : inst.tuples)
      if (!seen.insert(t.ids).second) return false;
  }
  if (key_on_values) {
    std::set<std::vector<Value>> seen;
    for (const IdTuple& t : inst.tuples)
      if (!seen.insert(t.values).second) return false;
  }
  return true;
}

IdInstance apply_value_permutation(const IdInstance& inst, const Permutation& p) {
  std::vector<IdTuple> tuples = inst.tuples;
  for (IdTuple& t : tuples)
    for (Value& v : t.values) v = p.apply(v);
  return IdInstance::of(inst.id_arity, inst.val_arity, std::move(tuples));
}

IdInstance apply_id_permutation(const IdInstance& inst, const Permutation& p) {
  std::vector<IdTuple> tuples = inst.tuples;
  for (IdTuple& t : tuples)
    for (IdToken& token : t.ids) token = p.apply(token);
  return IdInstance::of(inst.id_arity, inst.val_arity, std::move(tuples));
}

IdInstance canonicalize_ids(const IdInstance& inst) {
  if (inst.id_arity == 0) return inst;
  if (inst.id_arity > 1) throw UsageError("identifier arities above 1 are out of scope");
  // Signature of an id: the sorted list of value rows it occurs with. Two
  // ids with equal signatures are attached to exactly the same rows, so any
  // relative numbering of them yields the same tuple set; ordering ids by
  // signature therefore gives a normal form that depends only on the
  // instance shape, never on the incoming labels.
  std::map<IdToken, std::vector<std::vector<Value>>> signature;
  for (const IdTuple& t : inst.tuples) signature[t.ids[0]].push_back(t.values);
  for (auto& [token, rows] : signature) std::sort(rows.begin(), rows.end());
  std::vector<IdToken> order;
  for (const auto& [token, rows] : signature) order.push_back(token);
  std::stable_sort(order.begin(), order.end(), [&](IdToken a, IdToken b) {
    return signature.at(a) < signature.at(b);
  });
  std::map<IdToken, IdToken> rename;
  for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<int>(i) + 1;
  std::vector<IdTuple> tuples = inst.tuples;
  for (IdTuple& t : tuples) t.ids[0] = rename.at(t.ids[0]);
  return IdInstance::of(inst.id_arity, inst.val_arity, std::move(tuples));
}

bool eq_up_to_ids(const IdInstance& a, const IdInstance& b) {
  if (a.id_arity != b.id_arity || a.val_arity != b.val_arity)
    throw UsageError("double arity mismatch");
  return canonicalize_ids(a) == canonicalize_ids(b);
}

namespace {

// A class of a single-id-column schema is a multiset of nonempty value-row
// sets, one per id. Generating the block lists in non-decreasing signature
// order yields each class exactly once, already in canonical form.
std::vector<IdClass> enumerate_block_classes(IdSchema schema, int n_values, int max_ids) {
  bool singletons_only = schema == IdSchema::KId || schema == IdSchema::KBoth;
  bool disjoint = schema == IdSchema::KVal || schema == IdSchema::KBoth;

  std::vector<std::vector<Value>> blocks;
  for (int mask = 1; mask < (1 << n_values); ++mask) {
    std::vector<Value> block;
    for (int v = 0; v < n_values; ++v)
      if (mask & (1 << v)) block.push_back(v);
    if (singletons_only && block.size() != 1) continue;
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end());

  std::vector<int> block_masks(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    int mask = 0;
    for (Value v : blocks[i]) mask |= 1 << v;
    block_masks[i] = mask;
  }

  std::vector<IdClass> out;
  std::vector<std::size_t> chosen;
  auto record = [&] {
    std::vector<IdTuple> tuples;
    for (std::size_t j = 0; j < chosen.size(); ++j)
      for (Value v : blocks[chosen[j]])
        tuples.push_back(IdTuple{{static_cast<int>(j) + 1}, {v}});
    IdClass cls;
    cls.canonical = IdInstance::of(1, 1, std::move(tuples));
    cls.size_ids = static_cast<int>(chosen.size());
    out.push_back(std::move(cls));
  };
  auto dfs = [&](auto&& self, std::size_t min_block, int used_mask, int depth) -> void {
    record();
    if (depth == max_ids) return;
    for (std::size_t i = min_block; i < blocks.size(); ++i) {
      if (disjoint && (used_mask & block_masks[i])) continue;
      chosen.push_back(i);
      self(self, i, used_mask | block_masks[i], depth + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0, 0);

  std::sort(out.begin(), out.end(),
            [](const IdClass& a, const IdClass& b) { return a.canonical < b.canonical; });
  return out;
}

}  // namespace

std::vector<IdClass> enumerate_id_classes(IdSchema schema, int n_values, int max_ids) {
  if (n_values < 0 || max_ids < 0) throw UsageError("negative bound");
  if (n_values > 4) throw ResourceError(static_cast<std::uint64_t>(n_values), 4);
  if (max_ids > 6) throw ResourceError(static_cast<std::uint64_t>(max_ids), 6);
  if (schema == IdSchema::V11) {
    std::vector<IdClass> out;
    for (int mask = 0; mask < (1 << n_values); ++mask) {
      std::vector<IdTuple> tuples;
      for (int v = 0; v < n_values; ++v)
        if (mask & (1 << v)) tuples.push_back(IdTuple{{}, {v}});
      IdClass cls;
      cls.canonical = IdInstance::of(0, 1, std::move(tuples));
      cls.size_ids = 0;
      out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(),
              [](const IdClass& a, const IdClass& b) { return a.canonical < b.canonical; });
    return out;
  }
  return enumerate_block_classes(schema, n_values, max_ids);
}

std::vector<IdInstance> enumerate_id_instances(IdSchema schema, int n_values, int max_ids) {
  if (n_values < 0 || max_ids < 0) throw UsageError("negative bound");
  int ka = id_arity_of(schema);
  std::vector<IdTuple> grid;
  if (ka == 0) {
    for (int v = 0; v < n_values; ++v) grid.push_back(IdTuple{{}, {v}});
  } else {
    for (int id = 1; id <= max_ids; ++id)
      for (int v = 0; v < n_values; ++v) grid.push_back(IdTuple{{id}, {v}});
  }
  if (grid.size() > 16) throw ResourceError(std::uint64_t(1) << grid.size(), std::uint64_t(1) << 16);
  std::vector<IdInstance> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << grid.size()); ++mask) {
    std::vector<IdTuple> tuples;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask & (std::uint32_t(1) << i)) tuples.push_back(grid[i]);
    IdInstance inst = IdInstance::of(ka, 1, std::move(tuples));
    if (satisfies_id_schema(inst, schema)) out.push_back(std::move(inst));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AutomorphismSet class_automorphisms(const IdClass& cls, const std::vector<Value>& fixed) {
  std::vector<Value> carrier = cls.canonical.value_adom();
  carrier.insert(carrier.end(), fixed.begin(), fixed.end());
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  AutomorphismSet out;
  out.carrier = carrier;
  out.fixed = fixed;
  std::sort(out.fixed.begin(), out.fixed.end());
  out.fixed.erase(std::unique(out.fixed.begin(), out.fixed.end()), out.fixed.end());
  for (const Permutation& p : permutations_fixing(carrier, out.fixed))
    if (canonicalize_ids(apply_value_permutation(cls.canonical, p)) == cls.canonical)
      out.elements.push_back(p);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

CyclePropertyResult kid_cycle_property_check(int n_values, int max_ids) {
  CyclePropertyResult result;
  for (const IdClass& cls : enumerate_id_classes(IdSchema::KId, n_values, max_ids)) {
    AutomorphismSet group = class_automorphisms(cls, {});
    for (const Permutation& p : group.elements) {
      std::vector<std::vector<Value>> cycles = p.nontrivial_cycles();
      if (cycles.size() < 2) continue;
      for (const std::vector<Value>& cycle : cycles) {
        Permutation alone = p.cycle_only(cycle);
        if (!group.contains(alone)) {
          result.pass = false;
          result.witness_instance = cls.canonical;
          result.witness_automorphism = p;
          result.witness_cycle = alone;
          return result;
        }
      }
    }
  }
  return result;
}

BoundednessReport kval_boundedness_report(int n_values, int max_ids_min, int max_ids_max) {
  if (max_ids_min < 0 || max_ids_max < max_ids_min) throw UsageError("bad id budget range");
  BoundednessReport rep;
  rep.n_values = n_values;
  rep.max_ids_min = max_ids_min;
  rep.max_ids_max = max_ids_max;
  for (int m = max_ids_min; m <= max_ids_max; ++m) {
    rep.kid_counts.push_back(enumerate_id_classes(IdSchema::KId, n_values, m).size());
    rep.kval_counts.push_back(enumerate_id_classes(IdSchema::KVal, n_values, m).size());
  }
  bool saw_stable_region = false;
  rep.kval_stabilizes = true;
  for (int m = max_ids_min; m <= max_ids_max; ++m) {
    if (m < n_values || m == max_ids_min) continue;
    saw_stable_region = true;
    if (rep.kval_counts[static_cast<std::size_t>(m - max_ids_min)] !=
        rep.kval_counts[static_cast<std::size_t>(std::max(n_values, max_ids_min) - max_ids_min)])
      rep.kval_stabilizes = false;
  }
  if (!saw_stable_region && max_ids_min < n_values) rep.kval_stabilizes = false;
  rep.kid_strictly_increasing = rep.kid_counts.size() > 1;
  for (std::size_t i = 1; i < rep.kid_counts.size(); ++i)
    if (rep.kid_counts[i] <= rep.kid_counts[i - 1]) rep.kid_strictly_increasing = false;
  return rep;
}

std::string format_boundedness_report(const BoundednessReport& rep) {
  std::ostringstream os;
  os << "class counts over " << rep.n_values << " values\n";
  for (int m = rep.max_ids_min; m <= rep.max_ids_max; ++m) {
    std::size_t i = static_cast<std::size_t>(m - rep.max_ids_min);
    os << "max_ids=" << m << ": K_id=" << rep.kid_counts[i]
       << " K_val=" << rep.kval_counts[i] << "\n";
  }
  os << "K_val count stable once the id budget reaches the value count: "
     << (rep.kval_stabilizes ? "yes" : "no") << "\n";
  os << "K_id count strictly increasing at every tested step: "
     << (rep.kid_strictly_increasing ? "yes" : "no") << "\n";
  os << "note: strict growth at every tested step is the finite-scale reading of "
        "unboundedness; no finite run can witness more\n";
  return os.str();
}

IdMappingPair map_kboth_unary() {
  IdMappingPair pair;
  pair.name = "kboth_unary";
  pair.source = IdSchema::KBoth;
  pair.target = IdSchema::V11;
  pair.forward = [](const IdInstance& inst) {
    if (!satisfies_id_schema(inst, IdSchema::KBoth))
      throw UsageError("input is not a doubly keyed (1,1) instance");
    std::vector<IdTuple> tuples;
    for (const IdTuple& t : inst.tuples) tuples.push_back(IdTuple{{}, t.values});
    return IdInstance::of(0, 1, std::move(tuples));
  };
  pair.backward = [](const IdInstance& inst) {
    if (!satisfies_id_schema(inst, IdSchema::V11))
      throw UsageError("input is not a unary value instance");
    std::vector<IdTuple> tuples;
    int next_id = 1;
    for (const IdTuple& t : inst.tuples) tuples.push_back(IdTuple{{next_id++}, t.values});
    return IdInstance::of(1, 1, std::move(tuples));
  };
  return pair;
}

namespace {

std::string format_id_pair(const std::pair<IdInstance, IdInstance>& p) {
  return format_id_instance(p.first) + " -> " + format_id_instance(p.second);
}

}  // namespace

IdMapCheck check_total(const IdPairSet& pairs, const std::vector<IdInstance>& domain) {
  for (const IdInstance& inst : domain) {
    bool found = false;
    for (const auto& p : pairs)
      if (p.first == inst) found = true;
    if (!found)
      return {false, "no image for " + format_id_instance(inst)};
  }
  return {};
}

IdMapCheck check_functional_up_to_ids(const IdPairSet& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].first == pairs[j].first &&
          !eq_up_to_ids(pairs[i].second, pairs[j].second))
        return {false, format_id_pair(pairs[i]) + " versus " + format_id_pair(pairs[j])};
  return {};
}

IdMapCheck check_injective_up_to_ids(const IdPairSet& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].second == pairs[j].second &&
          !eq_up_to_ids(pairs[i].first, pairs[j].first))
        return {false, format_id_pair(pairs[i]) + " versus " + format_id_pair(pairs[j])};
  return {};
}

IdMapCheck check_generic_for_values(const IdPairSet& pairs,
                                    const std::vector<Value>& constants) {
  std::vector<Value> carrier = constants;
  for (const auto& p : pairs) {
    std::vector<Value> a = p.first.value_adom();
    std::vector<Value> b = p.second.value_adom();
    carrier.insert(carrier.end(), a.begin(), a.end());
    carrier.insert(carrier.end(), b.begin(), b.end());
  }
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::set<std::pair<IdInstance, IdInstance>> have(pairs.begin(), pairs.end());
  for (const Permutation& perm : permutations_fixing(carrier, constants))
    for (const auto& p : pairs) {
      std::pair<IdInstance, IdInstance> image{apply_value_permutation(p.first, perm),
                                              apply_value_permutation(p.second, perm)};
      if (have.count(image) == 0)
        return {false, format_id_pair(p) + " escapes under " + format_permutation(perm)};
    }
  return {};
}

IdMapCheck check_generic_for_ids(const IdPairSet& pairs) {
  std::vector<IdToken> universe;
  for (const auto& p : pairs) {
    std::vector<IdToken> a = p.first.idom();
    std::vector<IdToken> b = p.second.idom();
    universe.insert(universe.end(), a.begin(), a.end());
    universe.insert(universe.end(), b.begin(), b.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  std::set<std::pair<IdInstance, IdInstance>> have(pairs.begin(), pairs.end());
  for (const Permutation& perm : permutations_fixing(universe, {}))
    for (const auto& p : pairs) {
      std::pair<IdInstance, IdInstance> image{apply_id_permutation(p.first, perm),
                                              apply_id_permutation(p.second, perm)};
      if (have.count(image) == 0)
        return {false, format_id_pair(p) + " escapes under id renaming " +
                           format_permutation(perm)};
    }
  return {};
}

IdMapCheck check_surjective_up_to_ids(const IdPairSet& pairs,
                                      const std::vector<IdInstance>& codomain) {
  for (const IdInstance& inst : codomain) {
    bool found = false;
    for (const auto& p : pairs)
      if (p.second == inst) found = true;
    if (!found)
      return {false, "no preimage for " + format_id_instance(inst)};
  }
  return {};
}

std::string format_id_instance(const IdInstance& inst) {
  std::ostringstream os;
  os << "{";
  bool first_tuple = true;
  for (const IdTuple& t : inst.tuples) {
    if (!first_tuple) os << ",";
    first_tuple = false;
    bool wrap = t.ids.size() + t.values.size() > 1;
    if (wrap) os << "(";
    bool first = true;
    for (IdToken token : t.ids) {
      if (!first) os << ",";
      first = false;
      os << "#" << token;
    }
    for (Value v : t.values) {
      if (!first) os << ",";
      first = false;
      os << v;
    }
    if (wrap) os << ")";
  }
  os << "}";
  return os.str();
}

namespace {

struct IdScanner {
  const std::string& text;
  std::size_t pos = 0;

  explicit IdScanner(const std::string& t) : text(t) {}
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '#')
        ++pos;
      else
        break;
    }
    if (start == pos) throw UsageError("expected a token at position " + std::to_string(start));
    return text.substr(start, pos - start);
  }
};

int int_from(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw UsageError("");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " token: " + token);
  }
}

IdTuple id_tuple_from(IdScanner& sc, int id_arity, int val_arity) {
  IdTuple t;
  bool parens = sc.eat('(');
  if (!parens && id_arity + val_arity != 1)
    throw UsageError("tuples of arity above 1 need parentheses");
  for (int i = 0; i < id_arity + val_arity; ++i) {
    if (i > 0 && !sc.eat(',')) throw UsageError("expected ',' inside a tuple");
    std::string token = sc.token();
    if (i < id_arity) {
      if (token.empty() || token[0] != '#')
        throw UsageError("identifier tokens must start with '#': " + token);
      t.ids.push_back(int_from(token.substr(1), "identifier"));
    } else {
      if (!token.empty() && token[0] == '#')
        throw UsageError("value tokens must not start with '#': " + token);
      t.values.push_back(int_from(token, "value"));
    }
  }
  if (parens && !sc.eat(')')) throw UsageError("expected ')' after a tuple");
  return t;
}

}  // namespace

IdInstance parse_id_instance(const std::string& text, int id_arity, int val_arity) {
  IdScanner sc(text);
  if (!sc.eat('{')) throw UsageError("expected '{'");
  std::vector<IdTuple> tuples;
  if (sc.peek() != '}') {
    tuples.push_back(id_tuple_from(sc, id_arity, val_arity));
    while (sc.eat(',')) tuples.push_back(id_tuple_from(sc, id_arity, val_arity));
  }
  if (!sc.eat('}')) throw UsageError("expected '}'");
  sc.skip_ws();
  if (sc.pos != text.size()) throw UsageError("trailing input after instance");
  return IdInstance::of(id_arity, val_arity, std::move(tuples));
}

}  // namespace relcap
