#include "grassmax/counting.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grassmax::counting {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw verification_error(what + ": " + num.str() + " is not divisible by " + den.str());
  }
  return q;
}

void require_k(long k, long lo) {
  if (k < lo) {
    throw std::invalid_argument("k must be at least " + std::to_string(lo) + ", got " +
                                std::to_string(k));
  }
}

// C(m, r_lo..r_hi) along one row, advanced by neighbor ratios.
std::vector<BigInt> row_window(long m, long r_lo, long r_hi) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(r_hi - r_lo + 1));
  BigInt cur = binom(m, r_lo);
  out.push_back(cur);
  for (long r = r_lo; r < r_hi; ++r) {
    cur *= (m - r);
    cur = exact_div(cur, BigInt(r + 1), "binomial row step");
    out.push_back(cur);
  }
  return out;
}

// Sum of C(4k+9, i) over odd i in [2k+7, 4k+9], stepping i by two.
BigInt odd_tail_sum(long k) {
  const long m = 4 * k + 9;
  BigInt cur = binom(m, 2 * k + 7);
  BigInt total = cur;
  for (long r = 2 * k + 7; r + 2 <= m; r += 2) {
    cur *= (m - r);
    cur = exact_div(cur, BigInt(r + 1), "binomial row step");
    cur *= (m - r - 1);
    cur = exact_div(cur, BigInt(r + 2), "binomial row step");
    total += cur;
  }
  return total;
}

}  // namespace

BigInt binom(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt acc = 1;
  for (long i = 1; i <= r; ++i) {
    acc *= (n - r + i);
    acc = exact_div(acc, BigInt(i), "binomial");
  }
  return acc;
}

BigInt c1(long k) {
  require_k(k, 1);
  return 7 * binom(4 * k + 2, 2 * k) + binom(4 * k + 2, 2 * k + 3);
}

BigInt c2(long k) {
  require_k(k, 1);
  const long m = 4 * k + 2;
  return binom(m, 2 * k + 5) + 7 * binom(m, 2 * k + 4) + 21 * binom(m, 2 * k + 3) +
         7 * binom(m, 2 * k + 2) + 28 * binom(m, 2 * k + 1) + 21 * binom(m, 2 * k);
}

BigInt c3_sum(long k) {
  require_k(k, 1);
  BigInt total = 0;
  for (long i = 2 * k + 7; i <= 4 * k + 9; i += 2) {
    total += binom(4 * k + 9, i);
  }
  return total;
}

BigInt e_val(long k) {
  require_k(k, 1);
  const BigInt t = BigInt(6 * k + 13) * binom(4 * k + 7, 2 * k + 3);
  return exact_div(t, BigInt(2 * k + 5), "e(k)");
}

BigInt a_closed(long k) {
  require_k(k, 1);
  return pow2(4 * k + 7) - e_val(k);
}

BigInt d_val(long k) {
  require_k(k, 1);
  const long m = 4 * k + 2;
  return 35 * binom(m, 2 * k) + 22 * binom(m, 2 * k + 3) + binom(m, 2 * k + 5) +
         7 * binom(m, 2 * k + 4) + 28 * binom(m, 2 * k + 1);
}

BigRat qk(long k) {
  require_k(k, 1);
  const BigInt p = pow2(4 * k + 7);
  const BigRat via_sum(c1(k) + c2(k) + c3_sum(k), p);
  const BigRat via_diff(p + d_val(k) - e_val(k), p);
  if (via_sum != via_diff) {
    throw verification_error("qk routes disagree at k = " + std::to_string(k));
  }
  return via_sum;
}

CountReport count_report(long k) {
  require_k(k, 1);
  CountReport rep;
  rep.k = k;

  const long m = 4 * k + 2;
  const std::vector<BigInt> row = row_window(m, 2 * k, 2 * k + 5);
  rep.zero_binomial_term = (2 * k + 5 > m);

  rep.c1 = 7 * row[0] + row[3];
  rep.c2 = row[5] + 7 * row[4] + 21 * row[3] + 7 * row[2] + 28 * row[1] + 21 * row[0];
  rep.d = 35 * row[0] + 22 * row[3] + row[5] + 7 * row[4] + 28 * row[1];
  rep.c3 = odd_tail_sum(k);

  const BigInt t = BigInt(6 * k + 13) * binom(4 * k + 7, 2 * k + 3);
  BigInt e_q, e_r;
  boost::multiprecision::divide_qr(t, BigInt(2 * k + 5), e_q, e_r);
  rep.e_integral = (e_r == 0);
  rep.e = e_q;

  const BigInt p = pow2(4 * k + 7);
  rep.c3_closed_form = rep.e_integral && (rep.c3 == p - rep.e);

  const BigRat via_sum(rep.c1 + rep.c2 + rep.c3, p);
  const BigRat via_diff(p + rep.d - rep.e, p);
  rep.routes_agree = (rep.c1 + rep.c2 == rep.d) && (via_sum == via_diff);
  rep.qk = via_sum;
  rep.qk_lt_1 = (rep.qk < 1);

  const bool below_bound = pow2(4 * k + 8) + rep.c1 + rep.c2 + rep.c3 < 3 * p;
  rep.dim_translation = (below_bound == rep.qk_lt_1);

  if (!rep.e_integral || !rep.routes_agree || !rep.c3_closed_form || !rep.dim_translation) {
    std::string which;
    if (!rep.e_integral) which += " e-not-integral";
    if (!rep.routes_agree) which += " routes-disagree";
    if (!rep.c3_closed_form) which += " c3-closed-form";
    if (!rep.dim_translation) which += " dimension-translation";
    throw verification_error("counting certificate failed at k = " + std::to_string(k) + ":" +
                             which);
  }
  return rep;
}

std::vector<CountReport> sweep(long k_from, long k_to, int threads) {
  if (k_from < 1 || k_to < k_from) {
    throw std::invalid_argument("sweep requires 1 <= k_from <= k_to");
  }
  const std::size_t count = static_cast<std::size_t>(k_to - k_from + 1);
  std::vector<CountReport> out(count);

  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = count_report(k_from + static_cast<long>(i));
    return out;
  }

  std::vector<std::string> errors(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    try {
      out[i] = count_report(k_from + i);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!errors[i].empty()) throw verification_error(errors[i]);
  }
  return out;
}

long verify_c3_identity(long k_max) {
  require_k(k_max, 1);
  for (long k = 1; k <= k_max; ++k) {
    if (c3_sum(k) != a_closed(k)) {
      throw verification_error("odd tail sum differs from its closed form at k = " +
                               std::to_string(k));
    }
  }
  return k_max;
}

long verify_gamma_identity(long k_max) {
  require_k(k_max, 0);
  BigInt dfact = 105;    // 1*3*5*7, the k = 0 product
  BigInt fact_hi = 5040; // (4k+7)! at k = 0
  BigInt fact_lo = 6;    // (2k+3)! at k = 0
  for (long k = 0; k <= k_max; ++k) {
    const BigInt rhs = exact_div(fact_hi, pow2(2 * k + 3) * fact_lo, "gamma identity");
    if (dfact != rhs) {
      throw verification_error("odd double factorial identity fails at k = " + std::to_string(k));
    }
    dfact *= (4 * k + 9);
    dfact *= (4 * k + 11);
    fact_hi *= (4 * k + 8);
    fact_hi *= (4 * k + 9);
    fact_hi *= (4 * k + 10);
    fact_hi *= (4 * k + 11);
    fact_lo *= (2 * k + 4);
    fact_lo *= (2 * k + 5);
  }
  return k_max + 1;
}

}  // namespace grassmax::counting
