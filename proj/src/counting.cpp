#include "relcap/counting.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <sstream>

#include "relcap/errors.hpp"

namespace relcap {

// factorial / binomial caches grow monotonically and hand out references,
// so they live in deques (no reallocation of settled entries).

const BigCount& factorial(int n) {
  if (n < 0) throw UsageError("factorial of negative argument");
  static std::mutex mu;
  static std::deque<BigCount> table{BigCount(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n)
    table.push_back(table.back() * static_cast<int>(table.size()));
  return table[static_cast<std::size_t>(n)];
}

const BigCount& binomial(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, BigCount> table;
  static const BigCount zero(0);
  if (n < 0) throw UsageError("binomial with negative n");
  if (k < 0 || k > n) return zero;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find({n, k});
  if (it != table.end()) return it->second;
  BigCount acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);  // exact: product of i+1 consecutive integers
  }
  return table.emplace(std::make_pair(n, k), std::move(acc)).first->second;
}

BigCount ipow(const BigCount& base, std::uint64_t exp) {
  BigCount acc = 1;
  BigCount b = base;
  while (exp) {
    if (exp & 1) acc *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return acc;
}

const char* to_string(CountedClass c) {
  switch (c) {
    case CountedClass::Digraph: return "DIGRAPH";
    case CountedClass::SourceFree: return "SOURCE_FREE";
    case CountedClass::SourceSinkFree: return "SOURCE_SINK_FREE";
    case CountedClass::Symm: return "SYMM";
    case CountedClass::OutdegLe1: return "OUTDEG_LE1";
    case CountedClass::Cycles: return "CYCLES";
    case CountedClass::Outdeg1: return "OUTDEG1";
    case CountedClass::SymmDeg1: return "SYMM_DEG1";
    case CountedClass::PathsCycles: return "PATHS_CYCLES";
    case CountedClass::T1: return "T1";
  }
  return "?";
}

std::optional<CountedClass> counted_class_from_string(std::string_view s) {
  for (CountedClass c : all_counted_classes())
    if (s == to_string(c)) return c;
  return std::nullopt;
}

const std::vector<CountedClass>& all_counted_classes() {
  static const std::vector<CountedClass> all = {
      CountedClass::Digraph,  CountedClass::SourceFree, CountedClass::SourceSinkFree,
      CountedClass::Symm,     CountedClass::OutdegLe1,  CountedClass::Cycles,
      CountedClass::Outdeg1,  CountedClass::SymmDeg1,   CountedClass::PathsCycles,
      CountedClass::T1,
  };
  return all;
}

CountedClass counted_class(GraphClass c) {
  switch (c) {
    case GraphClass::Digraph: return CountedClass::Digraph;
    case GraphClass::SourceFree: return CountedClass::SourceFree;
    case GraphClass::SourceSinkFree: return CountedClass::SourceSinkFree;
    case GraphClass::Symm: return CountedClass::Symm;
    case GraphClass::OutdegLe1: return CountedClass::OutdegLe1;
    case GraphClass::Cycles: return CountedClass::Cycles;
    case GraphClass::Outdeg1: return CountedClass::Outdeg1;
    case GraphClass::SymmDeg1: return CountedClass::SymmDeg1;
    case GraphClass::PathsCycles: return CountedClass::PathsCycles;
  }
  throw UsageError("unknown graph class");
}

BigCount full_support_matrices(int k) {
  // k x k boolean matrices with no all-zero row or column (OEIS A048291),
  // by inclusion-exclusion over the set of empty rows.
  if (k < 0) throw UsageError("negative matrix size");
  BigCount acc = 0;
  for (int i = 0; i <= k; ++i) {
    BigCount term = binomial(k, i) * ipow(ipow(BigCount(2), static_cast<std::uint64_t>(k - i)) - 1,
                                          static_cast<std::uint64_t>(k));
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  if (acc < 0) throw ConsistencyError("matrix count went negative");
  return acc;
}

BigCount involutions(int k) {
  // Self-inverse permutations of k points (OEIS A000085).
  if (k < 0) throw UsageError("negative involution argument");
  BigCount acc = 0;
  for (int m = 0; 2 * m <= k; ++m)
    acc += factorial(k) / (ipow(BigCount(2), static_cast<std::uint64_t>(m)) * factorial(m) *
                           factorial(k - 2 * m));
  return acc;
}

BigCount formula_count(CountedClass label, int n) {
  if (n < 0) throw UsageError("negative domain size");
  const auto un = static_cast<std::uint64_t>(n);
  BigCount acc = 0;
  switch (label) {
    case CountedClass::Digraph:
      return ipow(BigCount(2), un * un);
    case CountedClass::SourceFree:
      for (int k = 0; k <= n; ++k)
        acc += binomial(n, k) *
               ipow(ipow(BigCount(2), static_cast<std::uint64_t>(k)) - 1,
                    static_cast<std::uint64_t>(k));
      return acc;
    case CountedClass::SourceSinkFree:
      for (int k = 0; k <= n; ++k) acc += binomial(n, k) * full_support_matrices(k);
      return acc;
    case CountedClass::Symm:
      return ipow(BigCount(2), static_cast<std::uint64_t>(n * (n - 1) / 2 + n));
    case CountedClass::OutdegLe1:
      return ipow(BigCount(n + 1), un);
    case CountedClass::Cycles:
      // OEIS A000522 shifted: sum over the set of active nodes of the number
      // of permutations of that set.
      for (int k = 0; k <= n; ++k) acc += binomial(n, k) * factorial(k);
      return acc;
    case CountedClass::Outdeg1:
      for (int k = 0; k <= n; ++k)
        acc += binomial(n, k) * ipow(BigCount(k), static_cast<std::uint64_t>(k));
      return acc;
    case CountedClass::SymmDeg1:
      for (int k = 0; k <= n; ++k) acc += binomial(n, k) * involutions(k);
      return acc;
    case CountedClass::PathsCycles:
      // Partial injections on the active node set (OEIS A002720 over subsets).
      for (int k = 0; k <= n; ++k) acc += binomial(n, k) * binomial(n, k) * factorial(k);
      return acc;
    case CountedClass::T1:
      return ipow(BigCount(1) + BigCount(n) * n, un);
  }
  throw UsageError("unknown counted class");
}

BigRatio latin_lower_bound(int n) {
  if (n < 1) throw UsageError("lower bound needs a positive order");
  BigCount num = ipow(factorial(n), 2 * static_cast<std::uint64_t>(n));
  BigCount den = ipow(BigCount(n), static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
  return BigRatio(num, den);
}

int lower_bound_crossover(int n_max) {
  // Least c >= 1 such that the exact rational lower bound on keyed-triple
  // counts exceeds (1 + n^2)^n for every tested n in [c, n_max].
  for (int c = 1; c <= n_max; ++c) {
    bool all_above = true;
    for (int n = c; n <= n_max; ++n)
      if (latin_lower_bound(n) <= BigRatio(formula_count(CountedClass::T1, n))) {
        all_above = false;
        break;
      }
    if (all_above) return c;
  }
  return -1;
}

GrowthReport compare_growth(CountedClass a, CountedClass b, int n_max) {
  if (n_max < 0) throw UsageError("negative growth range");
  GrowthReport rep;
  rep.a = a;
  rep.b = b;
  rep.n_max = n_max;
  rep.signs.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    BigCount fa = formula_count(a, n);
    BigCount fb = formula_count(b, n);
    rep.signs.push_back(fa > fb ? 1 : (fa < fb ? -1 : 0));
  }
  // Least c such that F_a(n) > F_b(n) holds for every tested n in [c, n_max].
  for (int c = 0; c <= n_max; ++c) {
    bool all_pos = true;
    for (int n = c; n <= n_max; ++n)
      if (rep.signs[static_cast<std::size_t>(n)] != 1) {
        all_pos = false;
        break;
      }
    if (all_pos) {
      rep.minimal_c = c;
      break;
    }
  }
  return rep;
}

std::string growth_report_csv(const GrowthReport& rep) {
  std::ostringstream os;
  os << "n," << to_string(rep.a) << "," << to_string(rep.b) << ",sign\n";
  for (int n = 0; n <= rep.n_max; ++n)
    os << n << "," << formula_count(rep.a, n) << "," << formula_count(rep.b, n) << ","
       << rep.signs[static_cast<std::size_t>(n)] << "\n";
  return os.str();
}

}  // namespace relcap
