#ifndef GRASSMAX_POLYRING_HPP
#define GRASSMAX_POLYRING_HPP

#include <string>
#include <utility>
#include <vector>

#include "grassmax/bignum.hpp"

namespace grassmax::polyring {

// Dense univariate polynomial over the integers, coefficients ascending
// by degree, trailing zeros trimmed (the zero polynomial has no coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);

  static IntPoly constant(BigInt c);
  // a*k + b
  static IntPoly linear(long a, long b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // zero outside the stored range
  BigInt coeff(int deg) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& s, const IntPoly& p);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Scaled five-term count: every summand is a product of six linear factors;
// degree 6, leading coefficient 5952 = 93 * 2^6.
IntPoly build_d_prime();
// Scaled complement count (6k+13)(4k+3)(4k+4)(4k+5)(4k+6)(4k+7);
// degree 6, leading coefficient 6144 = 96 * 2^6.
IntPoly build_e_prime();
// 24k (2k+5)(k+2)(k+1)(2k+3)^2, the factored form of e' - d'.
IntPoly build_rhs_factorization();

struct CoeffComparison {
  int deg = 0;
  BigInt difference;  // coefficient of e' - d'
  BigInt factored;    // coefficient of the factored form
};

struct FactorizationReport {
  std::vector<CoeffComparison> coefficients;  // degrees 0..6
  BigInt d_prime_leading;
  BigInt e_prime_leading;
  bool factors_positive = false;  // every factor of the RHS is positive for k >= 1
};

// Expands e' - d', compares it to the factored form coefficient by
// coefficient, and checks the leading coefficients and factor positivity.
// Throws verification_error naming the first mismatching degree.
FactorizationReport verify_factorization();

struct ScalingCheck {
  long k = 0;
  BigRat scale;  // (2k)!/(4k+2)! * (2k+5)! * (2k+1)(2k+2)(2k+3)
};

// For each sample k >= 1 checks scale > 0, d'(k) = d(k) * scale and
// e'(k) = e(k) * scale in exact rational arithmetic.
std::vector<ScalingCheck> verify_scaling_chain(const std::vector<long>& k_samples);

}  // namespace grassmax::polyring

#endif
