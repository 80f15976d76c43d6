#ifndef RELCAP_SBCHAIN_HPP
#define RELCAP_SBCHAIN_HPP

// Chain decomposition of the bipartite functional graph induced by two
// injections f: X -> Y and g: Y -> X, assembly of a bijection from the
// per-chain rules, and an equivariance check for group actions on the
// graph. Infinite chains are represented by finite cuts carrying explicit
// truncation flags; the construction never fabricates matches across a cut.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace relcap {

struct BipartiteFunctionalGraph {
  std::vector<std::string> x_nodes, y_nodes;   // declaration order, disjoint names
  std::map<std::string, std::string> f_edges;  // x -> y
  std::map<std::string, std::string> g_edges;  // y -> x
  std::set<std::string> truncated;             // nodes where a chain was cut
};

// UsageError unless: sides are disjoint, edges connect declared nodes in the
// right direction, every non-truncated node has exactly one outgoing edge
// (truncated nodes may lack theirs), and no node has two incoming edges.
void validate_graph(const BipartiteFunctionalGraph& g);

// Walk-based component shapes: the backward walk from any node either
// cycles (SH4), stops at an unflagged X-node (SH1) or Y-node (SH2), or
// stops at a truncation flag, hiding the true start (SH3).
enum class ChainShape { SH1, SH2, SH3, SH4 };
const char* to_string(ChainShape s);

struct ChainComponent {
  std::vector<std::string> nodes;  // traversal order from the chain start
  ChainShape shape = ChainShape::SH1;
};

// Partitions the nodes into maximal chains. Components appear in order of
// their first node in the declaration order of the graph.
std::vector<ChainComponent> classify_chains(const BipartiteFunctionalGraph& g);

enum class PairRule { FRule, GInverseRule };

struct ComponentMatch {
  ChainComponent component;
  PairRule rule = PairRule::FRule;
  std::vector<std::pair<std::string, std::string>> pairs;  // (x, y)
};

struct BijectionResult {
  std::vector<ComponentMatch> components;
  std::vector<std::pair<std::string, std::string>> pairs;  // union, sorted by x
  std::vector<std::string> uncovered;  // nodes left unmatched at a cut
  bool partial = false;                // true iff uncovered is nonempty
};

// f-edge pairs on SH1/SH3/SH4 components, inverted g-edge pairs on SH2.
// Complete components are covered exactly; truncated ones are matched on
// their complete prefix only, with the leftover nodes reported.
BijectionResult sb_bijection(const BipartiteFunctionalGraph& g);

// A group element: a side-preserving node bijection, given as a total map.
using NodeMap = std::map<std::string, std::string>;

enum class EquivarianceOutcome { Pass, Fail, PreconditionViolation };

struct EquivarianceCheckResult {
  EquivarianceOutcome outcome = EquivarianceOutcome::Pass;
  std::string detail;
};

// Verifies first that every element is a side- and flag-preserving bijection
// commuting with both edge maps (anything else is a precondition violation,
// reported as such), then that the assembled bijection commutes with every
// element.
EquivarianceCheckResult check_equivariant_bijection(const BipartiteFunctionalGraph& g,
                                                    const std::vector<NodeMap>& action);

// Graph of two total injections between {x0..x(n-1)} and {y0..y(n-1)}:
// f_to[i] is the y-index x_i maps to, g_to[j] the x-index y_j maps to.
// Both must be injective. On such graphs every chain is a cycle.
BipartiteFunctionalGraph make_two_injection_graph(const std::vector<int>& f_to,
                                                  const std::vector<int>& g_to);

// The instance sets of a swap-equivalent catalog pair at domain size n as
// the two sides, the column swap as both f and g, and one group element per
// domain permutation (acting on nodes by renaming instance values).
struct SwapFixture {
  BipartiteFunctionalGraph graph;
  std::vector<NodeMap> action;
};
SwapFixture make_swap_fixture(const std::string& left, const std::string& right, int n);

// Structured text: `node <name> X|Y [truncated]` lines, then `f <x> <y>` and
// `g <y> <x>` lines; blank lines and lines starting with "--" are ignored.
BipartiteFunctionalGraph parse_bipartite_graph(const std::string& text);
std::string format_bipartite_graph(const BipartiteFunctionalGraph& g);

}  // namespace relcap

#endif  // RELCAP_SBCHAIN_HPP
