#ifndef RELCAP_EXACTMATH_HPP
#define RELCAP_EXACTMATH_HPP

// Exact integer and rational arithmetic used by every counting path.
// Floating point never enters any verified comparison.

#include <boost/multiprecision/cpp_int.hpp>

namespace relcap {

using BigCount = boost::multiprecision::cpp_int;
using BigRatio = boost::multiprecision::cpp_rational;

// Memoised exact factorials and binomials.
const BigCount& factorial(int n);
const BigCount& binomial(int n, int k);

BigCount ipow(const BigCount& base, std::uint64_t exp);

}  // namespace relcap

#endif
