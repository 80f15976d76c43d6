#include "relcap/relmodel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "relcap/errors.hpp"

namespace relcap {

Tuple Tuple::of(const std::vector<Value>& comps) {
  if (comps.empty() || comps.size() > kMaxArity)
    throw UsageError("tuple arity must be between 1 and " + std::to_string(kMaxArity));
  Tuple t;
  t.arity_ = static_cast<std::int8_t>(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) t.comps_[i] = comps[i];
  return t;
}

Instance Instance::of(int arity, std::vector<Tuple> tuples) {
  if (arity < 1 || arity > kMaxArity) throw UsageError("instance arity out of range");
  for (const Tuple& t : tuples)
    if (t.arity() != arity) throw UsageError("tuple arity does not match instance arity");
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  Instance inst;
  inst.arity_ = arity;
  inst.tuples_ = std::move(tuples);
  return inst;
}

Instance Instance::empty(int arity) { return of(arity, {}); }

bool Instance::contains(const Tuple& t) const {
  return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

std::vector<Value> Instance::adom() const {
  std::vector<Value> vals;
  for (const Tuple& t : tuples_)
    for (int i = 0; i < t.arity(); ++i) vals.push_back(t[i]);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

bool operator<(const Instance& a, const Instance& b) {
  if (a.tuples_.size() != b.tuples_.size()) return a.tuples_.size() < b.tuples_.size();
  return a.tuples_ < b.tuples_;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.arity_ == b.arity_ && a.tuples_ == b.tuples_;
}

namespace {

void check_columns(const std::vector<int>& cols, int arity, bool need_increasing) {
  if (cols.empty()) throw UsageError("constraint column list is empty");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 1 || cols[i] > arity) throw UsageError("constraint column out of range");
    if (need_increasing && i > 0 && cols[i] <= cols[i - 1])
      throw UsageError("key columns must be strictly increasing");
  }
  if (!need_increasing) {
    std::vector<int> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw UsageError("inclusion dependency columns must be distinct");
  }
}

}  // namespace

void validate_schema(const SchemaDesc& schema) {
  if (schema.arity < 1 || schema.arity > kMaxArity) throw UsageError("schema arity out of range");
  for (const KeyConstraint& k : schema.keys) check_columns(k.columns, schema.arity, true);
  for (const InclusionDependency& d : schema.inds) {
    if (d.lhs.size() != d.rhs.size())
      throw UsageError("inclusion dependency sides must have equal length");
    check_columns(d.lhs, schema.arity, false);
    check_columns(d.rhs, schema.arity, false);
  }
}

bool satisfies_key(const Instance& inst, const KeyConstraint& key) {
  std::set<std::vector<Value>> seen;
  std::vector<Value> proj(key.columns.size());
  for (const Tuple& t : inst.tuples()) {
    for (std::size_t i = 0; i < key.columns.size(); ++i) proj[i] = t.col(key.columns[i]);
    if (!seen.insert(proj).second) return false;
  }
  return true;
}

bool satisfies_ind(const Instance& inst, const InclusionDependency& ind) {
  std::set<std::vector<Value>> rhs;
  std::vector<Value> proj(ind.rhs.size());
  for (const Tuple& t : inst.tuples()) {
    for (std::size_t i = 0; i < ind.rhs.size(); ++i) proj[i] = t.col(ind.rhs[i]);
    rhs.insert(proj);
  }
  proj.resize(ind.lhs.size());
  for (const Tuple& t : inst.tuples()) {
    for (std::size_t i = 0; i < ind.lhs.size(); ++i) proj[i] = t.col(ind.lhs[i]);
    if (!rhs.count(proj)) return false;
  }
  return true;
}

bool satisfies_schema(const Instance& inst, const SchemaDesc& schema) {
  if (inst.arity() != schema.arity) throw UsageError("instance arity does not match schema");
  for (const KeyConstraint& k : schema.keys)
    if (!satisfies_key(inst, k)) return false;
  for (const InclusionDependency& d : schema.inds)
    if (!satisfies_ind(inst, d)) return false;
  return true;
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Digraph: return "DIGRAPH";
    case GraphClass::SourceFree: return "SOURCE_FREE";
    case GraphClass::SourceSinkFree: return "SOURCE_SINK_FREE";
    case GraphClass::Symm: return "SYMM";
    case GraphClass::OutdegLe1: return "OUTDEG_LE1";
    case GraphClass::Cycles: return "CYCLES";
    case GraphClass::Outdeg1: return "OUTDEG1";
    case GraphClass::SymmDeg1: return "SYMM_DEG1";
    case GraphClass::PathsCycles: return "PATHS_CYCLES";
  }
  return "?";
}

const std::vector<GraphClass>& all_graph_classes() {
  static const std::vector<GraphClass> all = {
      GraphClass::Digraph,    GraphClass::SourceFree, GraphClass::SourceSinkFree,
      GraphClass::Symm,       GraphClass::OutdegLe1,  GraphClass::Cycles,
      GraphClass::Outdeg1,    GraphClass::SymmDeg1,   GraphClass::PathsCycles,
  };
  return all;
}

std::optional<GraphClass> graph_class_from_string(std::string_view s) {
  for (GraphClass c : all_graph_classes())
    if (s == to_string(c)) return c;
  return std::nullopt;
}

namespace {

struct Degrees {
  std::map<Value, int> in, out;
  std::vector<Value> nodes;
};

Degrees degrees_of(const Instance& inst) {
  Degrees d;
  d.nodes = inst.adom();
  for (Value v : d.nodes) {
    d.in[v] = 0;
    d.out[v] = 0;
  }
  for (const Tuple& t : inst.tuples()) {
    d.out[t[0]] += 1;
    d.in[t[1]] += 1;
  }
  return d;
}

bool is_symmetric(const Instance& inst) {
  for (const Tuple& t : inst.tuples())
    if (!inst.contains(Tuple(t[1], t[0]))) return false;
  return true;
}

}  // namespace

bool graph_in_class(const Instance& inst, GraphClass c) {
  if (inst.arity() != 2) throw UsageError("graph classifier needs arity 2");
  switch (c) {
    case GraphClass::Digraph:
      return true;
    case GraphClass::SourceFree: {
      Degrees d = degrees_of(inst);
      return std::all_of(d.nodes.begin(), d.nodes.end(), [&](Value v) { return d.in[v] >= 1; });
    }
    case GraphClass::SourceSinkFree: {
      Degrees d = degrees_of(inst);
      return std::all_of(d.nodes.begin(), d.nodes.end(),
                         [&](Value v) { return d.in[v] >= 1 && d.out[v] >= 1; });
    }
    case GraphClass::Symm:
      return is_symmetric(inst);
    case GraphClass::OutdegLe1: {
      Degrees d = degrees_of(inst);
      return std::all_of(d.nodes.begin(), d.nodes.end(), [&](Value v) { return d.out[v] <= 1; });
    }
    case GraphClass::Cycles: {
      Degrees d = degrees_of(inst);
      return std::all_of(d.nodes.begin(), d.nodes.end(),
                         [&](Value v) { return d.in[v] == 1 && d.out[v] == 1; });
    }
    case GraphClass::Outdeg1: {
      Degrees d = degrees_of(inst);
      return std::all_of(d.nodes.begin(), d.nodes.end(), [&](Value v) { return d.out[v] == 1; });
    }
    case GraphClass::SymmDeg1: {
      if (!is_symmetric(inst)) return false;
      Degrees d = degrees_of(inst);
      return std::all_of(d.nodes.begin(), d.nodes.end(), [&](Value v) { return d.out[v] == 1; });
    }
    case GraphClass::PathsCycles: {
      Degrees d = degrees_of(inst);
      return std::all_of(d.nodes.begin(), d.nodes.end(),
                         [&](Value v) { return d.in[v] <= 1 && d.out[v] <= 1; });
    }
  }
  return false;
}

std::vector<GraphClass> classify_graph(const Instance& inst) {
  std::vector<GraphClass> out;
  for (GraphClass c : all_graph_classes())
    if (graph_in_class(inst, c)) out.push_back(c);
  return out;
}

Permutation Permutation::identity(std::vector<Value> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::vector<Value> image = carrier;
  Permutation p;
  p.carrier_ = std::move(carrier);
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::of(std::vector<Value> carrier, std::vector<Value> image) {
  if (carrier.size() != image.size()) throw UsageError("permutation carrier/image size mismatch");
  if (!std::is_sorted(carrier.begin(), carrier.end()) ||
      std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end())
    throw UsageError("permutation carrier must be sorted and distinct");
  std::vector<Value> check = image;
  std::sort(check.begin(), check.end());
  if (check != carrier) throw UsageError("permutation image must rearrange the carrier");
  Permutation p;
  p.carrier_ = std::move(carrier);
  p.image_ = std::move(image);
  return p;
}

bool Permutation::in_carrier(Value v) const {
  return std::binary_search(carrier_.begin(), carrier_.end(), v);
}

Value Permutation::apply(Value v) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), v);
  if (it == carrier_.end() || *it != v) throw UsageError("value outside permutation carrier");
  return image_[static_cast<std::size_t>(it - carrier_.begin())];
}

bool Permutation::is_identity() const { return carrier_ == image_; }

bool Permutation::fixes(Value v) const { return in_carrier(v) && apply(v) == v; }

Permutation Permutation::inverse() const {
  std::vector<std::pair<Value, Value>> pairs;
  pairs.reserve(carrier_.size());
  for (std::size_t i = 0; i < carrier_.size(); ++i) pairs.emplace_back(image_[i], carrier_[i]);
  std::sort(pairs.begin(), pairs.end());
  Permutation p;
  p.carrier_.reserve(pairs.size());
  p.image_.reserve(pairs.size());
  for (auto& [from, to] : pairs) {
    p.carrier_.push_back(from);
    p.image_.push_back(to);
  }
  return p;
}

Permutation Permutation::compose_after(const Permutation& other) const {
  if (carrier_ != other.carrier_) throw UsageError("composition needs a common carrier");
  Permutation p;
  p.carrier_ = carrier_;
  p.image_.reserve(carrier_.size());
  for (std::size_t i = 0; i < carrier_.size(); ++i) p.image_.push_back(apply(other.image_[i]));
  return p;
}

Permutation Permutation::extended(const std::vector<Value>& extra) const {
  std::vector<std::pair<Value, Value>> pairs;
  for (std::size_t i = 0; i < carrier_.size(); ++i) pairs.emplace_back(carrier_[i], image_[i]);
  for (Value v : extra)
    if (!in_carrier(v)) pairs.emplace_back(v, v);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Permutation p;
  for (auto& [from, to] : pairs) {
    p.carrier_.push_back(from);
    p.image_.push_back(to);
  }
  return p;
}

std::vector<std::vector<Value>> Permutation::nontrivial_cycles() const {
  std::vector<std::vector<Value>> cycles;
  std::set<Value> done;
  for (Value start : carrier_) {
    if (done.count(start) || apply(start) == start) continue;
    std::vector<Value> cycle;
    Value v = start;
    do {
      cycle.push_back(v);
      done.insert(v);
      v = apply(v);
    } while (v != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Permutation Permutation::cycle_only(const std::vector<Value>& cycle) const {
  Permutation p = Permutation::identity(carrier_);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Value from = cycle[i];
    Value to = cycle[(i + 1) % cycle.size()];
    auto it = std::lower_bound(p.carrier_.begin(), p.carrier_.end(), from);
    if (it == p.carrier_.end() || *it != from) throw UsageError("cycle value outside carrier");
    p.image_[static_cast<std::size_t>(it - p.carrier_.begin())] = to;
  }
  return p;
}

Instance apply_permutation(const Instance& inst, const Permutation& perm) {
  std::vector<Tuple> out;
  out.reserve(inst.size());
  std::vector<Value> comps;
  for (const Tuple& t : inst.tuples()) {
    comps.clear();
    for (int i = 0; i < t.arity(); ++i) comps.push_back(perm.apply(t[i]));
    out.push_back(Tuple::of(comps));
  }
  return Instance::of(inst.arity(), std::move(out));
}

}  // namespace relcap
