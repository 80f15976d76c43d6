#include "relcap/sbchain.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "relcap/enumeration.hpp"
#include "relcap/errors.hpp"
#include "relcap/lattice.hpp"
#include "relcap/mappings.hpp"
#include "relcap/textio.hpp"

namespace relcap {

namespace {

struct GraphView {
  std::set<std::string> x_set, y_set;
  std::map<std::string, std::string> in_edge;  // reverse of both edge maps
};

GraphView view_of(const BipartiteFunctionalGraph& g) {
  GraphView v;
  for (const std::string& x : g.x_nodes)
    if (!v.x_set.insert(x).second) throw UsageError("duplicate node " + x);
  for (const std::string& y : g.y_nodes) {
    if (v.x_set.count(y)) throw UsageError("node on both sides: " + y);
    if (!v.y_set.insert(y).second) throw UsageError("duplicate node " + y);
  }
  for (const auto& [x, y] : g.f_edges) {
    if (!v.x_set.count(x)) throw UsageError("f edge from undeclared node " + x);
    if (!v.y_set.count(y)) throw UsageError("f edge into undeclared node " + y);
    if (!v.in_edge.emplace(y, x).second) throw UsageError("two incoming edges at " + y);
  }
  for (const auto& [y, x] : g.g_edges) {
    if (!v.y_set.count(y)) throw UsageError("g edge from undeclared node " + y);
    if (!v.x_set.count(x)) throw UsageError("g edge into undeclared node " + x);
    if (!v.in_edge.emplace(x, y).second) throw UsageError("two incoming edges at " + x);
  }
  for (const std::string& node : g.truncated)
    if (!v.x_set.count(node) && !v.y_set.count(node))
      throw UsageError("truncation flag on undeclared node " + node);
  for (const std::string& x : g.x_nodes)
    if (!g.truncated.count(x) && !g.f_edges.count(x))
      throw UsageError("non-truncated node without outgoing edge: " + x);
  for (const std::string& y : g.y_nodes)
    if (!g.truncated.count(y) && !g.g_edges.count(y))
      throw UsageError("non-truncated node without outgoing edge: " + y);
  return v;
}

const std::string* out_of(const BipartiteFunctionalGraph& g, const GraphView& v,
                          const std::string& node) {
  const auto& edges = v.x_set.count(node) ? g.f_edges : g.g_edges;
  auto it = edges.find(node);
  return it == edges.end() ? nullptr : &it->second;
}

}  // namespace

void validate_graph(const BipartiteFunctionalGraph& g) { view_of(g); }

const char* to_string(ChainShape s) {
  switch (s) {
    case ChainShape::SH1: return "SH1";
    case ChainShape::SH2: return "SH2";
    case ChainShape::SH3: return "SH3";
    case ChainShape::SH4: return "SH4";
  }
  throw UsageError("unknown chain shape");
}

std::vector<ChainComponent> classify_chains(const BipartiteFunctionalGraph& g) {
  GraphView v = view_of(g);
  std::vector<std::string> order = g.x_nodes;
  order.insert(order.end(), g.y_nodes.begin(), g.y_nodes.end());

  std::set<std::string> visited;
  std::vector<ChainComponent> out;
  for (const std::string& seed : order) {
    if (visited.count(seed)) continue;
    ChainComponent comp;

    // Walk backward along the unique incoming edges. Since forward edges
    // are unique too, any revisit means the whole component is a cycle.
    std::string cur = seed;
    std::set<std::string> walked{cur};
    bool cycle = false;
    while (true) {
      auto it = v.in_edge.find(cur);
      if (it == v.in_edge.end()) break;
      cur = it->second;
      if (!walked.insert(cur).second) {
        cycle = true;
        break;
      }
    }

    std::string start = cur;
    if (cycle) {
      comp.shape = ChainShape::SH4;
      start = *std::min_element(walked.begin(), walked.end());
    } else if (g.truncated.count(start)) {
      comp.shape = ChainShape::SH3;
    } else {
      comp.shape = v.x_set.count(start) ? ChainShape::SH1 : ChainShape::SH2;
    }

    std::string node = start;
    while (true) {
      comp.nodes.push_back(node);
      visited.insert(node);
      const std::string* next = out_of(g, v, node);
      if (next == nullptr || (cycle && *next == start)) break;
      node = *next;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

BijectionResult sb_bijection(const BipartiteFunctionalGraph& g) {
  GraphView v = view_of(g);
  BijectionResult result;
  std::vector<ChainComponent> comps = classify_chains(g);
  for (ChainComponent& comp : comps) {
    ComponentMatch match;
    match.rule = comp.shape == ChainShape::SH2 ? PairRule::GInverseRule : PairRule::FRule;
    std::set<std::string> covered;
    for (const std::string& node : comp.nodes) {
      bool x_side = v.x_set.count(node) > 0;
      if (match.rule == PairRule::FRule && x_side) {
        auto it = g.f_edges.find(node);
        if (it != g.f_edges.end()) {
          match.pairs.emplace_back(node, it->second);
          covered.insert(node);
          covered.insert(it->second);
        }
      } else if (match.rule == PairRule::GInverseRule && !x_side) {
        auto it = g.g_edges.find(node);
        if (it != g.g_edges.end()) {
          match.pairs.emplace_back(it->second, node);
          covered.insert(node);
          covered.insert(it->second);
        }
      }
    }
    for (const std::string& node : comp.nodes)
      if (!covered.count(node)) result.uncovered.push_back(node);
    match.component = std::move(comp);
    result.components.push_back(std::move(match));
  }
  for (const ComponentMatch& match : result.components)
    result.pairs.insert(result.pairs.end(), match.pairs.begin(), match.pairs.end());
  std::sort(result.pairs.begin(), result.pairs.end());
  std::sort(result.uncovered.begin(), result.uncovered.end());
  result.partial = !result.uncovered.empty();
  return result;
}

EquivarianceCheckResult check_equivariant_bijection(const BipartiteFunctionalGraph& g,
                                                    const std::vector<NodeMap>& action) {
  GraphView v = view_of(g);
  std::vector<std::string> all_nodes = g.x_nodes;
  all_nodes.insert(all_nodes.end(), g.y_nodes.begin(), g.y_nodes.end());

  for (std::size_t e = 0; e < action.size(); ++e) {
    const NodeMap& pi = action[e];
    std::string label = "element " + std::to_string(e);
    if (pi.size() != all_nodes.size())
      return {EquivarianceOutcome::PreconditionViolation, label + " is not total"};
    std::set<std::string> image;
    for (const std::string& node : all_nodes) {
      auto it = pi.find(node);
      if (it == pi.end())
        return {EquivarianceOutcome::PreconditionViolation,
                label + " is undefined at " + node};
      const std::string& to = it->second;
      if (!image.insert(to).second)
        return {EquivarianceOutcome::PreconditionViolation, label + " is not injective"};
      bool side_in = v.x_set.count(node) > 0;
      bool side_out = v.x_set.count(to) > 0;
      if (!v.x_set.count(to) && !v.y_set.count(to))
        return {EquivarianceOutcome::PreconditionViolation,
                label + " maps " + node + " outside the graph"};
      if (side_in != side_out)
        return {EquivarianceOutcome::PreconditionViolation,
                label + " does not preserve sides at " + node};
      if (g.truncated.count(node) != g.truncated.count(to))
        return {EquivarianceOutcome::PreconditionViolation,
                label + " does not preserve truncation flags at " + node};
    }
    auto commutes = [&](const std::map<std::string, std::string>& edges) {
      for (const std::string& node : all_nodes) {
        bool relevant = edges.count(node) > 0;
        bool image_relevant = edges.count(pi.at(node)) > 0;
        if (relevant != image_relevant) return std::optional<std::string>(node);
        if (relevant && edges.at(pi.at(node)) != pi.at(edges.at(node)))
          return std::optional<std::string>(node);
      }
      return std::optional<std::string>();
    };
    if (auto bad = commutes(g.f_edges))
      return {EquivarianceOutcome::PreconditionViolation,
              label + " does not commute with the f edges at " + *bad};
    if (auto bad = commutes(g.g_edges))
      return {EquivarianceOutcome::PreconditionViolation,
              label + " does not commute with the g edges at " + *bad};
  }

  BijectionResult b = sb_bijection(g);
  std::map<std::string, std::string> h(b.pairs.begin(), b.pairs.end());
  for (std::size_t e = 0; e < action.size(); ++e) {
    const NodeMap& pi = action[e];
    for (const auto& [x, y] : b.pairs) {
      auto it = h.find(pi.at(x));
      if (it == h.end())
        return {EquivarianceOutcome::Fail, "element " + std::to_string(e) +
                                               " moves matched node " + x +
                                               " onto an unmatched one"};
      if (it->second != pi.at(y))
        return {EquivarianceOutcome::Fail,
                "element " + std::to_string(e) + " breaks commutation at " + x + ": " +
                    it->second + " versus " + pi.at(y)};
    }
  }
  return {};
}

BipartiteFunctionalGraph make_two_injection_graph(const std::vector<int>& f_to,
                                                  const std::vector<int>& g_to) {
  if (f_to.size() != g_to.size()) throw UsageError("side sizes differ");
  int n = static_cast<int>(f_to.size());
  auto check_injection = [n](const std::vector<int>& to, const char* name) {
    std::set<int> seen;
    for (int v : to) {
      if (v < 0 || v >= n) throw UsageError(std::string(name) + " maps outside the other side");
      if (!seen.insert(v).second) throw UsageError(std::string(name) + " is not injective");
    }
  };
  check_injection(f_to, "f");
  check_injection(g_to, "g");
  BipartiteFunctionalGraph g;
  for (int i = 0; i < n; ++i) g.x_nodes.push_back("x" + std::to_string(i));
  for (int j = 0; j < n; ++j) g.y_nodes.push_back("y" + std::to_string(j));
  for (std::size_t i = 0; i < f_to.size(); ++i)
    g.f_edges[g.x_nodes[i]] = g.y_nodes[static_cast<std::size_t>(f_to[i])];
  for (std::size_t j = 0; j < g_to.size(); ++j)
    g.g_edges[g.y_nodes[j]] = g.x_nodes[static_cast<std::size_t>(g_to[j])];
  validate_graph(g);
  return g;
}

SwapFixture make_swap_fixture(const std::string& left, const std::string& right, int n) {
  if (n < 0 || n > 3) throw UsageError("swap fixtures are built for n <= 3");
  MappingEntry to_right = map_swap_columns(left, right);
  MappingEntry to_left = map_swap_columns(right, left);
  DomainSpec dom = DomainSpec::of(n);
  std::vector<Instance> left_set = collect_instances(catalog_schema(left), dom);
  std::vector<Instance> right_set = collect_instances(catalog_schema(right), dom);

  auto x_name = [](const Instance& inst) { return "x:" + format_instance(inst); };
  auto y_name = [](const Instance& inst) { return "y:" + format_instance(inst); };

  SwapFixture fix;
  for (const Instance& inst : left_set) fix.graph.x_nodes.push_back(x_name(inst));
  for (const Instance& inst : right_set) fix.graph.y_nodes.push_back(y_name(inst));
  for (const Instance& inst : left_set)
    fix.graph.f_edges[x_name(inst)] = y_name(apply_mapping(to_right, inst));
  for (const Instance& inst : right_set)
    fix.graph.g_edges[y_name(inst)] = x_name(apply_mapping(to_left, inst));
  validate_graph(fix.graph);

  for (const Permutation& p : enumerate_permutations(dom)) {
    NodeMap element;
    for (const Instance& inst : left_set)
      element[x_name(inst)] = x_name(apply_permutation(inst, p));
    for (const Instance& inst : right_set)
      element[y_name(inst)] = y_name(apply_permutation(inst, p));
    fix.action.push_back(std::move(element));
  }
  return fix;
}

BipartiteFunctionalGraph parse_bipartite_graph(const std::string& text) {
  BipartiteFunctionalGraph g;
  std::set<std::string> x_set, y_set;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0].rfind("--", 0) == 0) continue;
    std::string where = " on line " + std::to_string(line_no);
    if (tokens[0] == "node") {
      if (tokens.size() < 3 || tokens.size() > 4 || (tokens[2] != "X" && tokens[2] != "Y"))
        throw UsageError("expected 'node <name> X|Y [truncated]'" + where);
      if (tokens.size() == 4) {
        if (tokens[3] != "truncated")
          throw UsageError("unknown node flag '" + tokens[3] + "'" + where);
        g.truncated.insert(tokens[1]);
      }
      if (tokens[2] == "X") {
        g.x_nodes.push_back(tokens[1]);
        x_set.insert(tokens[1]);
      } else {
        g.y_nodes.push_back(tokens[1]);
        y_set.insert(tokens[1]);
      }
    } else if (tokens[0] == "f" || tokens[0] == "g") {
      if (tokens.size() != 3)
        throw UsageError("expected '" + tokens[0] + " <from> <to>'" + where);
      auto& edges = tokens[0] == "f" ? g.f_edges : g.g_edges;
      if (!edges.emplace(tokens[1], tokens[2]).second)
        throw UsageError("second outgoing edge at " + tokens[1] + where);
    } else {
      throw UsageError("unknown directive '" + tokens[0] + "'" + where);
    }
  }
  validate_graph(g);
  return g;
}

std::string format_bipartite_graph(const BipartiteFunctionalGraph& g) {
  std::ostringstream os;
  for (const std::string& x : g.x_nodes) {
    os << "node " << x << " X";
    if (g.truncated.count(x)) os << " truncated";
    os << "\n";
  }
  for (const std::string& y : g.y_nodes) {
    os << "node " << y << " Y";
    if (g.truncated.count(y)) os << " truncated";
    os << "\n";
  }
  for (const std::string& x : g.x_nodes)
    if (auto it = g.f_edges.find(x); it != g.f_edges.end())
      os << "f " << x << " " << it->second << "\n";
  for (const std::string& y : g.y_nodes)
    if (auto it = g.g_edges.find(y); it != g.g_edges.end())
      os << "g " << y << " " << it->second << "\n";
  return os.str();
}

}  // namespace relcap
