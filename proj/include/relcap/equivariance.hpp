#ifndef RELCAP_EQUIVARIANCE_HPP
#define RELCAP_EQUIVARIANCE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "relcap/enumeration.hpp"
#include "relcap/mappings.hpp"
#include "relcap/relmodel.hpp"

namespace relcap {

// Permutations of a fixed carrier that leave an instance unchanged while
// fixing the listed values pointwise.  Group axioms are re-verified on
// construction.
struct AutomorphismSet {
  std::vector<Value> carrier;         // sorted
  std::vector<Value> fixed;           // sorted subset of carrier
  std::vector<Permutation> elements;  // sorted, identity first

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Permutation& p) const;
  bool operator==(const AutomorphismSet& o) const = default;
};

AutomorphismSet automorphism_group(const Instance& inst, std::vector<Value> carrier,
                                   std::vector<Value> fixed);

struct Orbit {
  Instance representative;        // canonically least member
  std::vector<Instance> members;  // sorted
};

// Partition of the schema's instances over the domain into closures under
// the permutations fixing `fixed`.
std::vector<Orbit> orbits(const SchemaDesc& schema, const DomainSpec& dom,
                          const std::vector<Value>& fixed, EnumLimits limits = {});

// Extends p by the identity outside its carrier (mapping images may contain
// values beyond the domain, all of which stay put).
Instance apply_permutation_extended(const Instance& inst, const Permutation& p);

struct GenericityResult {
  bool pass = false;
  // First failure in canonical (instance, permutation) order:
  std::optional<SourceInstance> witness;
  std::optional<Permutation> perm;
  Instance image_of_permuted = Instance::empty(1);
  Instance permuted_image = Instance::empty(1);
};

// Checks forward(p(I)) == p(forward(I)) for every source instance over the
// domain and every domain permutation fixing the mapping's constants.
GenericityResult check_genericity(const MappingEntry& map, const DomainSpec& dom,
                                  EnumLimits limits = {});

struct InjectivityResult {
  bool pass = false;
  std::optional<std::pair<SourceInstance, SourceInstance>> witness;  // first collision
};

InjectivityResult check_injectivity(const MappingEntry& map, const DomainSpec& dom,
                                    EnumLimits limits = {});

// All target instances over carrier = adom(inst) ∪ fixed whose automorphism
// group over that carrier equals that of inst.  An empty result certifies
// that no injective mapping commuting with the carrier's permutations can
// send inst into the target class.
std::vector<Instance> find_image_candidates(const Instance& inst, const std::vector<Value>& fixed,
                                            const SchemaDesc& target, EnumLimits limits = {});

}  // namespace relcap

#endif  // RELCAP_EQUIVARIANCE_HPP
