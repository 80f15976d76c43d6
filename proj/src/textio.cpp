#include "relcap/textio.hpp"

#include <cctype>
#include <sstream>

#include "relcap/errors.hpp"

namespace relcap {

std::string format_value(Value v, const DomainSpec* dom) {
  if (dom != nullptr && v >= 0 && v < dom->size && static_cast<std::size_t>(v) < dom->names.size())
    return dom->names[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

std::string format_tuple(const Tuple& t, const DomainSpec* dom) {
  std::string out = "(";
  for (int c = 1; c <= t.arity(); ++c) {
    if (c > 1) out += ',';
    out += format_value(t.col(c), dom);
  }
  out += ')';
  return out;
}

std::string format_instance(const Instance& inst, const DomainSpec* dom) {
  std::string out = "{";
  bool first = true;
  for (const Tuple& t : inst.tuples()) {
    if (!first) out += ',';
    first = false;
    if (inst.arity() == 1)
      out += format_value(t.col(1), dom);
    else
      out += format_tuple(t, dom);
  }
  out += '}';
  return out;
}

std::string format_instances(const std::vector<Instance>& rels, const DomainSpec* dom) {
  std::string out;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (i > 0) out += ';';
    out += format_instance(rels[i], dom);
  }
  return out;
}

std::string format_permutation(const Permutation& p, const DomainSpec* dom) {
  auto cycles = p.nontrivial_cycles();
  if (cycles.empty()) return "id";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out += ' ';
      out += format_value(cyc[i], dom);
    }
    out += ')';
  }
  return out;
}

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '#';
}

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
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
    while (pos < text.size() && name_char(text[pos])) ++pos;
    if (pos == start) throw UsageError("expected a value at position " + std::to_string(start) +
                                       " in \"" + text + "\"");
    return text.substr(start, pos - start);
  }
};

Value value_from_token(const std::string& tok, const DomainSpec* dom) {
  if (dom != nullptr)
    for (std::size_t i = 0; i < dom->names.size(); ++i)
      if (dom->names[i] == tok) return static_cast<Value>(i);
  bool digits = !tok.empty();
  std::size_t start = tok.size() > 1 && tok[0] == '-' ? 1 : 0;
  if (start == tok.size()) digits = false;
  for (std::size_t i = start; i < tok.size(); ++i)
    if (std::isdigit(static_cast<unsigned char>(tok[i])) == 0) digits = false;
  if (!digits) throw UsageError("unknown value \"" + tok + "\"");
  return static_cast<Value>(std::stol(tok));
}

Tuple tuple_from(Scanner& sc, int arity, const DomainSpec* dom) {
  if (arity == 1 && sc.peek() != '(') return Tuple::unary(value_from_token(sc.token(), dom));
  if (!sc.eat('(')) throw UsageError("expected '(' in \"" + sc.text + "\"");
  std::vector<Value> vals;
  vals.push_back(value_from_token(sc.token(), dom));
  while (sc.eat(',')) vals.push_back(value_from_token(sc.token(), dom));
  if (!sc.eat(')')) throw UsageError("expected ')' in \"" + sc.text + "\"");
  if (static_cast<int>(vals.size()) != arity)
    throw UsageError("expected arity " + std::to_string(arity) + " tuple in \"" + sc.text + "\"");
  return Tuple::of(vals);
}

Instance instance_from(Scanner& sc, int arity, const DomainSpec* dom) {
  if (!sc.eat('{')) throw UsageError("expected '{' in \"" + sc.text + "\"");
  std::vector<Tuple> tuples;
  if (sc.peek() != '}') {
    tuples.push_back(tuple_from(sc, arity, dom));
    while (sc.eat(',')) tuples.push_back(tuple_from(sc, arity, dom));
  }
  if (!sc.eat('}')) throw UsageError("expected '}' in \"" + sc.text + "\"");
  return Instance::of(arity, std::move(tuples));
}

}  // namespace

Value parse_value(const std::string& token, const DomainSpec* dom) {
  Scanner sc{token};
  Value v = value_from_token(sc.token(), dom);
  sc.skip_ws();
  if (sc.pos != token.size()) throw UsageError("trailing input in \"" + token + "\"");
  return v;
}

Instance parse_instance(int arity, const std::string& text, const DomainSpec* dom) {
  Scanner sc{text};
  Instance inst = instance_from(sc, arity, dom);
  sc.skip_ws();
  if (sc.pos != text.size()) throw UsageError("trailing input in \"" + text + "\"");
  return inst;
}

std::vector<Instance> parse_instances(int arity, const std::string& text, const DomainSpec* dom) {
  Scanner sc{text};
  std::vector<Instance> out;
  out.push_back(instance_from(sc, arity, dom));
  while (sc.eat(';')) out.push_back(instance_from(sc, arity, dom));
  sc.skip_ws();
  if (sc.pos != text.size()) throw UsageError("trailing input in \"" + text + "\"");
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

namespace {

bool integer_token(const std::string& tok) {
  std::size_t start = tok.size() > 1 && tok[0] == '-' ? 1 : 0;
  if (start == tok.size()) return false;
  for (std::size_t i = start; i < tok.size(); ++i)
    if (std::isdigit(static_cast<unsigned char>(tok[i])) == 0) return false;
  return true;
}

}  // namespace

NamedInstance read_instance_lines(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])) != 0) ++i;
    if (i >= line.size()) continue;
    if (line.compare(i, 2, "--") == 0) continue;
    std::istringstream fields(line.substr(i));
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    rows.push_back(std::move(tokens));
  }
  if (rows.empty()) throw UsageError("instance file holds no tuples, so its arity is unknown");
  std::size_t arity = rows.front().size();
  if (arity == 0 || arity > static_cast<std::size_t>(kMaxArity))
    throw UsageError("unsupported tuple arity " + std::to_string(arity));
  for (const auto& row : rows) {
    if (row.size() != arity)
      throw UsageError("inconsistent tuple arity in instance file");
    for (const std::string& t : row)
      if (t[0] == '#')
        throw UsageError("value tokens must not start with '#': " + t);
  }
  bool numeric = true;
  for (const auto& row : rows)
    for (const std::string& t : row)
      if (!integer_token(t)) numeric = false;
  NamedInstance out;
  std::vector<Tuple> tuples;
  if (numeric) {
    for (const auto& row : rows) {
      std::vector<Value> vals;
      for (const std::string& t : row) vals.push_back(static_cast<Value>(std::stol(t)));
      tuples.push_back(Tuple::of(vals));
    }
  } else {
    std::vector<std::string>& names = out.names;
    auto intern = [&names](const std::string& t) {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == t) return static_cast<Value>(i);
      names.push_back(t);
      return static_cast<Value>(names.size() - 1);
    };
    for (const auto& row : rows) {
      std::vector<Value> vals;
      for (const std::string& t : row) vals.push_back(intern(t));
      tuples.push_back(Tuple::of(vals));
    }
  }
  out.instance = Instance::of(static_cast<int>(arity), std::move(tuples));
  return out;
}

std::string write_instance_lines(const Instance& inst, const std::vector<std::string>& names) {
  std::string out;
  for (const Tuple& t : inst.tuples()) {
    for (int c = 1; c <= t.arity(); ++c) {
      if (c > 1) out += ' ';
      Value v = t.col(c);
      if (v >= 0 && static_cast<std::size_t>(v) < names.size())
        out += names[static_cast<std::size_t>(v)];
      else
        out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace relcap

