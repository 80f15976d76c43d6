#ifndef RELCAP_COUNTING_HPP
#define RELCAP_COUNTING_HPP

// Closed-form instance counts for the classes that admit one, helper
// sequences, the partial-Latin-square lower bound, and exact growth
// comparisons between counting functions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relcap/exactmath.hpp"
#include "relcap/relmodel.hpp"

namespace relcap {

// Classes with a closed-form count: the nine binary graph classes plus the
// single-key ternary schema T1.
enum class CountedClass {
  Digraph,
  SourceFree,
  SourceSinkFree,
  Symm,
  OutdegLe1,
  Cycles,
  Outdeg1,
  SymmDeg1,
  PathsCycles,
  T1,
};

const char* to_string(CountedClass c);
std::optional<CountedClass> counted_class_from_string(std::string_view s);
const std::vector<CountedClass>& all_counted_classes();
CountedClass counted_class(GraphClass c);

// Number of instances of the class over a domain of size n.
BigCount formula_count(CountedClass label, int n);

// k x k boolean matrices with no all-zero row or column (OEIS A048291).
BigCount full_support_matrices(int k);
// Self-inverse permutations of k points (OEIS A000085).
BigCount involutions(int k);

// Exact rational lower bound (n!)^{2n} / n^{n^2} on the number of Latin
// squares of order n, usable as a lower bound on T6 instance counts.
BigRatio latin_lower_bound(int n);

struct GrowthReport {
  CountedClass a, b;
  int n_max = 0;
  std::vector<int> signs;  // signs[n] = sign of F_a(n) - F_b(n)
  // Least c such that F_a(n) > F_b(n) for every tested n in [c, n_max].
  std::optional<int> minimal_c;
};

// Least c >= 1 from which the exact rational lower bound on the most
// constrained ternary class stays strictly above (1 + n^2)^n through n_max,
// or -1 when no such c exists in range.
int lower_bound_crossover(int n_max);

GrowthReport compare_growth(CountedClass a, CountedClass b, int n_max);
std::string growth_report_csv(const GrowthReport& rep);

}  // namespace relcap

#endif
