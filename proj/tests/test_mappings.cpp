#include <doctest.h>

#include <set>

#include "relcap/equivariance.hpp"
#include "relcap/errors.hpp"
#include "relcap/lattice.hpp"
#include "relcap/mappings.hpp"

using namespace relcap;

namespace {

// Forward image of every source instance over the domain, as a sorted set.
std::set<Instance> image_set(const MappingEntry& map, int n) {
  std::set<Instance> out;
  for (const SourceInstance& src : enumerate_source(map.source, DomainSpec::of(n)))
    out.insert(apply_mapping(map, src));
  return out;
}

}  // namespace

TEST_CASE("the mapping catalog resolves by name") {
  CHECK(find_mapping("swap").name == "swap");
  CHECK(find_mapping("m").name == "m");
  CHECK_THROWS_AS(find_mapping("nope"), UsageError);
  CHECK(mapping_catalog().size() == 6);
}

TEST_CASE("source spaces enumerate the expected number of instances") {
  CHECK(enumerate_source(find_mapping("swap").source, DomainSpec::of(2)).size() == 9);
  CHECK(enumerate_source(find_mapping("f").source, DomainSpec::of(2)).size() == 25);
  CHECK(enumerate_source(find_mapping("tagging2").source, DomainSpec::of(2)).size() == 16);
}

TEST_CASE("the column swap maps one single-key schema onto the other") {
  const MappingEntry& swap = find_mapping("swap");
  for (int n = 0; n <= 3; ++n) {
    std::set<Instance> image = image_set(swap, n);
    std::vector<Instance> target = collect_instances(catalog_schema("S10"), DomainSpec::of(n));
    CAPTURE(n);
    CHECK(image == std::set<Instance>(target.begin(), target.end()));
  }
}

TEST_CASE("source-loop completion lands inside its target and inverts") {
  const MappingEntry& m = find_mapping("m");
  for (int n = 0; n <= 3; ++n)
    for (const SourceInstance& src : enumerate_source(m.source, DomainSpec::of(n))) {
      Instance image = apply_mapping(m, src);
      CHECK(satisfies_schema(image, catalog_schema("S3")));
      CHECK(invert_mapping(m, image) == src);
    }
}

TEST_CASE("path-end closure compensates for the failed set inclusion") {
  const MappingEntry& close = find_mapping("close_sinks");
  // An open path violates the target class directly...
  Instance path = Instance::of(2, {Tuple(0, 1)});
  CHECK(satisfies_schema(path, catalog_schema("S15")));
  CHECK_FALSE(satisfies_schema(path, catalog_schema("S7")));
  // ...but its closed image satisfies it and still recovers the source.
  Instance image = apply_mapping(close, SourceInstance::single(path));
  CHECK(satisfies_schema(image, catalog_schema("S7")));
  CHECK(invert_mapping(close, image) == SourceInstance::single(path));
}

TEST_CASE("the ternary mapping reproduces its two pinned displays") {
  const MappingEntry& f = find_mapping("f");

  Instance first = apply_mapping(f, Instance::of(3, {Tuple(0, 1, 2), Tuple(3, 1, 2)}));
  CHECK(first == Instance::of(3, {Tuple(0, 1, 0), Tuple(0, 0, 2), Tuple(3, 1, 3),
                                  Tuple(3, 3, 2)}));

  Instance second = apply_mapping(f, Instance::of(3, {Tuple(0, 1, 2), Tuple(1, 3, 0)}));
  CHECK(second == Instance::of(3, {Tuple(0, 1, 1), Tuple(0, 0, 2), Tuple(1, 3, 1),
                                   Tuple(1, 1, 0)}));
}

TEST_CASE("the ternary mapping hits all three target keys and inverts") {
  const MappingEntry& f = find_mapping("f");
  const SchemaDesc& target = catalog_schema("T6");
  REQUIRE(target.keys.size() == 3);
  for (int n = 0; n <= 2; ++n)
    for (const SourceInstance& src : enumerate_source(f.source, DomainSpec::of(n))) {
      Instance image = apply_mapping(f, src);
      for (const KeyConstraint& key : target.keys) CHECK(satisfies_key(image, key));
      CHECK(invert_mapping(f, image) == src);
    }
}

TEST_CASE("catalog mappings advertised as generic pass both checkers") {
  for (const MappingEntry& entry : mapping_catalog()) {
    if (!entry.expected_generic) continue;
    int cap = entry.name == "f" ? 2 : (entry.source.unary_family > 0 ? 2 : 3);
    for (int n = 0; n <= cap; ++n) {
      CAPTURE(entry.name);
      CAPTURE(n);
      CHECK(check_genericity(entry, DomainSpec::of(n)).pass);
      CHECK(check_injectivity(entry, DomainSpec::of(n)).pass);
    }
  }
}

TEST_CASE("unary tagging keeps its components apart") {
  const MappingEntry& tagging = find_mapping("tagging2");
  SourceInstance src;
  src.rels = {Instance::of(1, {Tuple::unary(0)}),
              Instance::of(1, {Tuple::unary(0), Tuple::unary(1)})};
  Instance image = apply_mapping(tagging, src);
  CHECK(image.size() == 3);
  CHECK(invert_mapping(tagging, image) == src);
  CHECK(tagging.constants.size() == 2);
}

TEST_CASE("the prime-power encoder is injective without being generic") {
  const MappingEntry& enc = find_mapping("prime_encode");
  CHECK_FALSE(enc.expected_generic);
  CHECK_FALSE(enc.has_inverse());
  for (int n = 0; n <= 2; ++n) CHECK(check_injectivity(enc, DomainSpec::of(n)).pass);
  // 2^1 * 3^1 on the sole tuple (0,0): code 6, stored as value 5.
  Instance image = apply_mapping(enc, Instance::of(2, {Tuple(0, 0)}));
  CHECK(image == Instance::of(1, {Tuple::unary(5)}));
}

TEST_CASE("mapping application validates the source") {
  const MappingEntry& m = find_mapping("m");
  Instance bad = Instance::of(2, {Tuple(0, 0), Tuple(0, 1)});  // violates key{1}
  CHECK_THROWS_AS(apply_mapping(m, bad), UsageError);
  CHECK_THROWS_AS(apply_mapping(find_mapping("tagging2"), bad), UsageError);
}

TEST_CASE("inversion rejects instances outside the image") {
  const MappingEntry& m = find_mapping("m");
  // The complete graph on two nodes is the one source&sink-free instance at
  // n=2 that no completion produces (9 sources, 10 target instances).
  Instance stray =
      Instance::of(2, {Tuple(0, 0), Tuple(1, 1), Tuple(0, 1), Tuple(1, 0)});
  CHECK(satisfies_schema(stray, catalog_schema("S3")));
  CHECK_THROWS_AS(invert_mapping(m, stray), RecoveryError);
  CHECK_THROWS_AS(invert_mapping(find_mapping("prime_encode"), Instance::empty(1)),
                  UsageError);
}
