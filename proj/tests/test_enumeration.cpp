#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "relcap/enumeration.hpp"
#include "relcap/errors.hpp"
#include "relcap/lattice.hpp"
#include "relcap/textio.hpp"

using namespace relcap;

namespace {

// Independent reference path: filter every subset of the full candidate-tuple
// grid, optionally only subsets up to a size cap (usable whenever some key
// bounds instance size).
std::vector<Instance> powerset_filter(const SchemaDesc& schema, int n, int size_cap = -1) {
  std::vector<Tuple> cells;
  if (schema.arity == 2) {
    for (Value a = 0; a < n; ++a)
      for (Value b = 0; b < n; ++b) cells.emplace_back(a, b);
  } else {
    for (Value a = 0; a < n; ++a)
      for (Value b = 0; b < n; ++b)
        for (Value c = 0; c < n; ++c) cells.emplace_back(a, b, c);
  }
  REQUIRE(cells.size() <= 27);
  std::vector<Instance> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << cells.size()); ++mask) {
    if (size_cap >= 0 && std::popcount(mask) > size_cap) continue;
    std::vector<Tuple> chosen;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (mask & (std::uint32_t(1) << i)) chosen.push_back(cells[i]);
    Instance inst = Instance::of(schema.arity, std::move(chosen));
    if (satisfies_schema(inst, schema)) out.push_back(inst);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("SYMM_DEG1 at n=2 enumerates exactly its five instances") {
  std::vector<Instance> got = collect_instances(catalog_schema("S9"), DomainSpec::of(2));
  std::vector<Instance> expect{
      Instance::empty(2),
      Instance::of(2, {Tuple(0, 0)}),
      Instance::of(2, {Tuple(1, 1)}),
      Instance::of(2, {Tuple(0, 0), Tuple(1, 1)}),
      Instance::of(2, {Tuple(0, 1), Tuple(1, 0)}),
  };
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
}

TEST_CASE("every schema admits exactly the empty instance at n=0") {
  for (const CatalogEntry& e : binary_catalog())
    CHECK(collect_instances(e.schema, DomainSpec::of(0)) ==
          std::vector<Instance>{Instance::empty(2)});
  for (const CatalogEntry& e : ternary_catalog())
    CHECK(collect_instances(e.schema, DomainSpec::of(0)) ==
          std::vector<Instance>{Instance::empty(3)});
}

TEST_CASE("binary enumeration equals the powerset filter up to n=3") {
  for (const CatalogEntry& e : binary_catalog())
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(e.schema.name);
      CAPTURE(n);
      CHECK(collect_instances(e.schema, DomainSpec::of(n)) == powerset_filter(e.schema, n));
    }
}

TEST_CASE("ternary enumeration equals the powerset filter up to n=2") {
  for (const CatalogEntry& e : ternary_catalog())
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(e.schema.name);
      CAPTURE(n);
      CHECK(collect_instances(e.schema, DomainSpec::of(n)) == powerset_filter(e.schema, n));
    }
}

TEST_CASE("singly-keyed ternary schemas match a size-capped filter at n=3") {
  // A singleton key bounds instances to one tuple per key value, so only
  // subsets of size <= 3 can qualify and the reference filter stays small.
  for (const char* name : {"T1", "T2", "T3", "T7"}) {
    const SchemaDesc& schema = catalog_schema(name);
    CAPTURE(name);
    CHECK(collect_instances(schema, DomainSpec::of(3)) == powerset_filter(schema, 3, 3));
  }
}

TEST_CASE("enumeration order is canonical and repeatable") {
  InstanceStream first = enumerate_instances(catalog_schema("S3"), DomainSpec::of(3));
  InstanceStream second = enumerate_instances(catalog_schema("S3"), DomainSpec::of(3));
  std::optional<Instance> prev;
  while (true) {
    std::optional<Instance> a = first.next();
    std::optional<Instance> b = second.next();
    REQUIRE((a.has_value() == b.has_value()));
    if (!a.has_value()) break;
    CHECK(*a == *b);
    if (prev.has_value()) CHECK(*prev < *a);
    prev = std::move(a);
  }
}

TEST_CASE("enumerated sets are closed under domain permutations") {
  std::vector<Instance> all = collect_instances(catalog_schema("S5"), DomainSpec::of(3));
  for (const Permutation& p : enumerate_permutations(DomainSpec::of(3)))
    for (const Instance& inst : all) {
      Instance mapped = apply_permutation(inst, p);
      CHECK(std::binary_search(all.begin(), all.end(), mapped));
    }
}

TEST_CASE("count_instances equals the stream length") {
  CHECK(count_instances(catalog_schema("S0"), DomainSpec::of(2)) == 16);
  CHECK(count_instances(catalog_schema("S1"), DomainSpec::of(2)) == 12);
  CHECK(count_instances(catalog_schema("S3"), DomainSpec::of(2)) == 10);
  CHECK(count_instances(catalog_schema("T1"), DomainSpec::of(2)) == 25);
}

TEST_CASE("full consumption of an oversized keyless space fails upfront") {
  try {
    count_instances(catalog_schema("S0"), DomainSpec::of(5));
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.estimate == (std::uint64_t(1) << 25));
    CHECK(e.budget == (std::uint64_t(1) << 24));
  }
}

TEST_CASE("a tiny node budget stops streaming with a resource error") {
  EnumLimits limits;
  limits.node_budget = 4;
  InstanceStream stream = enumerate_instances(catalog_schema("S0"), DomainSpec::of(2), limits);
  CHECK_THROWS_AS(
      [&] {
        while (stream.next()) {
        }
      }(),
      ResourceError);
}

TEST_CASE("lazy streams stay usable where full consumption would not be") {
  // The unconstrained ternary space at n=3 holds 2^27 instances, far beyond
  // the default budget, but pulling a handful of instances is fine.
  InstanceStream stream = enumerate_instances(catalog_schema("T0"), DomainSpec::of(3));
  for (int i = 0; i < 40; ++i) REQUIRE(stream.next().has_value());
  CHECK_THROWS_AS(count_instances(catalog_schema("T0"), DomainSpec::of(3)), ResourceError);
}

TEST_CASE("permutation enumeration respects fixed points") {
  CHECK(enumerate_permutations(DomainSpec::of(3)).size() == 6);
  CHECK(enumerate_permutations(DomainSpec::of(3), {0, 1, 2}).size() == 1);
  std::vector<Permutation> fixed_last = enumerate_permutations(DomainSpec::of(4), {3});
  CHECK(fixed_last.size() == 6);
  for (const Permutation& p : fixed_last) CHECK(p.fixes(3));
}

TEST_CASE("permutations_fixing validates its arguments") {
  CHECK_THROWS_AS(permutations_fixing({0, 1}, {5}), UsageError);
  std::vector<Value> nine{0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(permutations_fixing(nine, {}), ResourceError);
  CHECK(permutations_fixing(nine, {0}).size() == 40320);  // 8 movable points
}
