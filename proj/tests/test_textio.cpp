#include <doctest.h>

#include "relcap/errors.hpp"
#include "relcap/textio.hpp"

using namespace relcap;

TEST_CASE("instances format to braces and parse back") {
  Instance inst = Instance::of(2, {Tuple(0, 1), Tuple(1, 0)});
  std::string text = format_instance(inst);
  CHECK(text == "{(0,1),(1,0)}");
  CHECK(parse_instance(2, text) == inst);
  CHECK(format_instance(Instance::empty(2)) == "{}");
  CHECK(parse_instance(2, "{}") == Instance::empty(2));
}

TEST_CASE("instance parsing reports malformed input") {
  CHECK_THROWS_AS(parse_instance(2, "{(0,1)"), UsageError);
  CHECK_THROWS_AS(parse_instance(2, "{(0,1,2)}"), UsageError);
  CHECK_THROWS_AS(parse_instance(2, "{(0,1)} trailing"), UsageError);
}

TEST_CASE("instance lists join with semicolons") {
  std::vector<Instance> rels{Instance::of(1, {Tuple::unary(0)}), Instance::empty(1)};
  CHECK(format_instances(rels) == "{0};{}");
  CHECK(parse_instances(1, "{0};{}") == rels);
}

TEST_CASE("permutations format as cycles") {
  CHECK(format_permutation(Permutation::identity({0, 1})) == "id");
  CHECK(format_permutation(Permutation::of({0, 1, 2}, {1, 2, 0})) == "(0 1 2)");
  CHECK(format_permutation(Permutation::of({0, 1, 2, 3}, {1, 0, 3, 2})) == "(0 1)(2 3)");
}

TEST_CASE("line files hold one whitespace-separated tuple per line") {
  NamedInstance named = read_instance_lines("0 1\n2 0\n");
  CHECK(named.instance == Instance::of(2, {Tuple(0, 1), Tuple(2, 0)}));
  CHECK(named.names.empty());
  CHECK(write_instance_lines(named.instance, {}) == "0 1\n2 0\n");
}

TEST_CASE("line files skip blanks and dash-dash comments") {
  NamedInstance named = read_instance_lines("-- header\n\n0 1\n  -- middle\n1 2\n");
  CHECK(named.instance == Instance::of(2, {Tuple(0, 1), Tuple(1, 2)}));
}

TEST_CASE("named tokens are interned by first appearance") {
  NamedInstance named = read_instance_lines("b a\na a\n");
  CHECK(named.names == std::vector<std::string>{"b", "a"});
  CHECK(named.instance == Instance::of(2, {Tuple(0, 1), Tuple(1, 1)}));
  CHECK(write_instance_lines(named.instance, named.names) == "b a\na a\n");
}

TEST_CASE("line files reject ragged rows, id tokens, and empty input") {
  CHECK_THROWS_AS(read_instance_lines("0 1\n2\n"), UsageError);
  CHECK_THROWS_AS(read_instance_lines("#1 0\n"), UsageError);
  CHECK_THROWS_AS(read_instance_lines("-- only a comment\n"), UsageError);
  CHECK_THROWS_AS(read_instance_lines("0 1 2 3\n"), UsageError);
}

TEST_CASE("dot escaping quotes embedded characters") {
  CHECK(dot_escape("plain") == "plain");
  CHECK(dot_escape("a\"b") == "a\\\"b");
  CHECK(dot_escape("a\\b") == "a\\\\b");
}
