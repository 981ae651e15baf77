#ifndef GRASSMAX_COUNTING_HPP
#define GRASSMAX_COUNTING_HPP

#include <vector>

#include "grassmax/bignum.hpp"

namespace grassmax::counting {

// C(n, r); zero outside 0 <= r <= n.
BigInt binom(long n, long r);

// The three layer counts over the ground set [4k+9], k >= 1.
BigInt c1(long k);
BigInt c2(long k);
// Sum of C(4k+9, i) over odd i in [2k+7, 4k+9].
BigInt c3_sum(long k);
// Closed form for the same sum: 2^{4k+7} - e(k).
BigInt a_closed(long k);
// Five-term alternative for c1 + c2 used as the second evaluation route.
BigInt d_val(long k);
// (6k+13)/(2k+5) * C(4k+7, 2k+3); the quotient is asserted integral.
BigInt e_val(long k);
// (c1 + c2 + c3) / 2^{4k+7}, cross-checked against 1 + (d - e)/2^{4k+7}.
BigRat qk(long k);

struct CountReport {
  long k = 0;
  BigInt c1;
  BigInt c2;
  BigInt c3;
  BigInt d;
  BigInt e;
  BigRat qk;
  bool qk_lt_1 = false;
  // true when a referenced binomial row index exceeds the row (k = 1 only)
  bool zero_binomial_term = false;
  bool routes_agree = false;
  bool e_integral = false;
  bool c3_closed_form = false;
  // 2^{4k+8} + c1 + c2 + c3 < 3 * 2^{4k+7}  iff  qk < 1
  bool dim_translation = false;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

// Full certificate for one k; throws verification_error if any internal
// identity fails. Binomials along the row are advanced by neighbor ratios,
// so a long sweep costs far less than independent evaluations.
CountReport count_report(long k);

// Reports for k_from..k_to inclusive, in order. threads > 1 distributes the
// loop across OpenMP workers; results and any failure (smallest k) are
// identical to the serial run.
std::vector<CountReport> sweep(long k_from, long k_to, int threads = 1);

// Checks c3_sum(k) == a_closed(k) for k = 1..k_max; returns the number of
// cases checked. Throws verification_error naming the first failing k.
long verify_c3_identity(long k_max);

// Checks prod_{j=0}^{2k+3} (2j+1) == (4k+7)! / (2^{2k+3} (2k+3)!) for
// k = 0..k_max with incrementally maintained factorials; returns the
// number of cases checked.
long verify_gamma_identity(long k_max);

}  // namespace grassmax::counting

#endif
