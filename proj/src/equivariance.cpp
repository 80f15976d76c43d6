#include "relcap/equivariance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "relcap/errors.hpp"

namespace relcap {

namespace {

void verify_group_axioms(const AutomorphismSet& g) {
  bool has_identity = false;
  for (const Permutation& p : g.elements) {
    if (p.is_identity()) has_identity = true;
    for (Value v : g.fixed)
      if (p.apply(v) != v) throw ConsistencyError("automorphism moves a fixed value");
  }
  if (!has_identity) throw ConsistencyError("automorphism set lacks the identity");
  for (const Permutation& p : g.elements) {
    if (!g.contains(p.inverse())) throw ConsistencyError("automorphism set lacks an inverse");
    for (const Permutation& q : g.elements)
      if (!g.contains(p.compose_after(q)))
        throw ConsistencyError("automorphism set is not closed under composition");
  }
}

}  // namespace

bool AutomorphismSet::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

AutomorphismSet automorphism_group(const Instance& inst, std::vector<Value> carrier,
                                   std::vector<Value> fixed) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  for (Value v : inst.adom())
    if (!std::binary_search(carrier.begin(), carrier.end(), v))
      throw UsageError("instance value outside the carrier");

  AutomorphismSet g;
  g.carrier = carrier;
  g.fixed = fixed;
  for (const Permutation& p : permutations_fixing(carrier, fixed))
    if (apply_permutation(inst, p) == inst) g.elements.push_back(p);
  std::sort(g.elements.begin(), g.elements.end());
  verify_group_axioms(g);
  return g;
}

std::vector<Orbit> orbits(const SchemaDesc& schema, const DomainSpec& dom,
                          const std::vector<Value>& fixed, EnumLimits limits) {
  std::vector<Instance> all = collect_instances(schema, dom, limits);
  std::vector<Permutation> perms = enumerate_permutations(dom, fixed);
  std::map<Instance, bool> visited;
  for (const Instance& inst : all) visited.emplace(inst, false);

  std::vector<Orbit> out;
  for (const Instance& inst : all) {
    auto it = visited.find(inst);
    if (it->second) continue;
    std::set<Instance> closure;
    std::vector<Instance> frontier{inst};
    while (!frontier.empty()) {
      Instance current = std::move(frontier.back());
      frontier.pop_back();
      if (!closure.insert(current).second) continue;
      for (const Permutation& p : perms) {
        Instance moved = apply_permutation(current, p);
        if (closure.count(moved) == 0) frontier.push_back(std::move(moved));
      }
    }
    Orbit orbit;
    orbit.members.assign(closure.begin(), closure.end());
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();
    for (const Instance& member : orbit.members) {
      auto mark = visited.find(member);
      if (mark == visited.end())
        throw ConsistencyError("orbit escaped the enumerated instance set");
      mark->second = true;
    }
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
  return out;
}

Instance apply_permutation_extended(const Instance& inst, const Permutation& p) {
  std::vector<Tuple> out;
  out.reserve(inst.tuples().size());
  for (const Tuple& t : inst.tuples()) {
    std::vector<Value> vals;
    for (int c = 1; c <= t.arity(); ++c) {
      Value v = t.col(c);
      vals.push_back(p.in_carrier(v) ? p.apply(v) : v);
    }
    out.push_back(Tuple::of(vals));
  }
  return Instance::of(inst.arity(), std::move(out));
}

GenericityResult check_genericity(const MappingEntry& map, const DomainSpec& dom,
                                  EnumLimits limits) {
  std::set<Value> carrier_set(map.constants.begin(), map.constants.end());
  for (Value v : dom.values()) carrier_set.insert(v);
  std::vector<Value> carrier(carrier_set.begin(), carrier_set.end());
  std::vector<Permutation> perms = permutations_fixing(carrier, map.constants);

  GenericityResult res;
  for (const SourceInstance& inst : enumerate_source(map.source, dom, limits)) {
    for (const Permutation& p : perms) {
      Instance image_of_permuted = map.forward(permute_source(inst, p));
      Instance permuted_image = apply_permutation_extended(map.forward(inst), p);
      if (!(image_of_permuted == permuted_image)) {
        res.pass = false;
        res.witness = inst;
        res.perm = p;
        res.image_of_permuted = std::move(image_of_permuted);
        res.permuted_image = std::move(permuted_image);
        return res;
      }
    }
  }
  res.pass = true;
  return res;
}

InjectivityResult check_injectivity(const MappingEntry& map, const DomainSpec& dom,
                                    EnumLimits limits) {
  InjectivityResult res;
  std::map<Instance, SourceInstance> seen;
  for (const SourceInstance& inst : enumerate_source(map.source, dom, limits)) {
    Instance image = map.forward(inst);
    auto [it, fresh] = seen.emplace(std::move(image), inst);
    if (!fresh) {
      res.pass = false;
      res.witness = std::make_pair(it->second, inst);
      return res;
    }
  }
  res.pass = true;
  return res;
}

std::vector<Instance> find_image_candidates(const Instance& inst, const std::vector<Value>& fixed,
                                            const SchemaDesc& target, EnumLimits limits) {
  std::set<Value> carrier_set(fixed.begin(), fixed.end());
  for (Value v : inst.adom()) carrier_set.insert(v);
  std::vector<Value> carrier(carrier_set.begin(), carrier_set.end());

  AutomorphismSet base = automorphism_group(inst, carrier, fixed);
  std::vector<Instance> out;
  InstanceStream stream = enumerate_instances_over(target, carrier, limits);
  while (auto candidate = stream.next())
    if (automorphism_group(*candidate, carrier, fixed) == base) out.push_back(*candidate);
  return out;
}

}  // namespace relcap
