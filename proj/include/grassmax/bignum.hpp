#ifndef GRASSMAX_BIGNUM_HPP
#define GRASSMAX_BIGNUM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace grassmax {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow2(long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return BigInt(1) << e;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// num/den in lowest terms; integers print without the slash.
inline std::string rat_str(const BigRat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Raised when an exact mathematical identity or inequality the library
// asserts fails to hold. Reaching it means a formula, not an input, is wrong.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grassmax

#endif
