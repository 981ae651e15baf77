#include "grassmax/polyring.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

#include "grassmax/counting.hpp"

namespace grassmax::polyring {

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::linear(long a, long b) { return IntPoly({BigInt(b), BigInt(a)}); }

BigInt IntPoly::coeff(int deg) const {
  if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(deg)];
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& s, const IntPoly& p) {
  std::vector<BigInt> out = p.coeffs_;
  for (auto& c : out) c *= s;
  return IntPoly(std::move(out));
}

namespace {

IntPoly product(std::initializer_list<IntPoly> factors) {
  IntPoly acc = IntPoly::constant(1);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

}  // namespace

IntPoly build_d_prime() {
  const IntPoly common = product({IntPoly::linear(2, 1), IntPoly::linear(2, 2),
                                  IntPoly::linear(2, 3)});
  const IntPoly t1 = BigInt(35) * product({IntPoly::linear(2, 5), IntPoly::linear(2, 4),
                                           IntPoly::linear(2, 3)}) * common;
  const IntPoly t2 = BigInt(22) * product({IntPoly::linear(2, 0), IntPoly::linear(2, 5),
                                           IntPoly::linear(2, 4)}) * common;
  const IntPoly t3 = product({IntPoly::linear(2, 0), IntPoly::linear(2, -1),
                              IntPoly::linear(2, -2)}) * common;
  const IntPoly t4 = BigInt(7) * product({IntPoly::linear(2, 0), IntPoly::linear(2, -1),
                                          IntPoly::linear(2, 5)}) * common;
  const IntPoly t5 = BigInt(28) * product({IntPoly::linear(2, 5), IntPoly::linear(2, 4),
                                           IntPoly::linear(2, 3), IntPoly::linear(2, 2),
                                           IntPoly::linear(2, 3), IntPoly::linear(2, 2)});
  return t1 + t2 + t3 + t4 + t5;
}

IntPoly build_e_prime() {
  return product({IntPoly::linear(6, 13), IntPoly::linear(4, 3), IntPoly::linear(4, 4),
                  IntPoly::linear(4, 5), IntPoly::linear(4, 6), IntPoly::linear(4, 7)});
}

IntPoly build_rhs_factorization() {
  return BigInt(24) * product({IntPoly::linear(1, 0), IntPoly::linear(2, 5),
                               IntPoly::linear(1, 2), IntPoly::linear(1, 1),
                               IntPoly::linear(2, 3), IntPoly::linear(2, 3)});
}

FactorizationReport verify_factorization() {
  const IntPoly dp = build_d_prime();
  const IntPoly ep = build_e_prime();
  const IntPoly diff = ep - dp;
  const IntPoly rhs = build_rhs_factorization();

  FactorizationReport rep;
  const int top = std::max(diff.degree(), rhs.degree());
  for (int deg = 0; deg <= top; ++deg) {
    rep.coefficients.push_back({deg, diff.coeff(deg), rhs.coeff(deg)});
  }
  for (const auto& row : rep.coefficients) {
    if (row.difference != row.factored) {
      throw verification_error("factorization mismatch at degree " + std::to_string(row.deg) +
                               ": " + row.difference.str() + " vs " + row.factored.str());
    }
  }

  rep.d_prime_leading = dp.coeff(6);
  rep.e_prime_leading = ep.coeff(6);
  if (rep.d_prime_leading != 93 * 64 || rep.e_prime_leading != 96 * 64) {
    throw verification_error("unexpected leading coefficients: " + rep.d_prime_leading.str() +
                             ", " + rep.e_prime_leading.str());
  }

  // Nonnegative coefficients plus a positive value at 1 make every factor
  // positive on all of k >= 1.
  const std::vector<IntPoly> factors = {
      BigInt(24) * IntPoly::linear(1, 0), IntPoly::linear(2, 5), IntPoly::linear(1, 2),
      IntPoly::linear(1, 1),              IntPoly::linear(2, 3),
  };
  rep.factors_positive = true;
  for (const auto& f : factors) {
    const bool nonneg = std::all_of(f.coeffs().begin(), f.coeffs().end(),
                                    [](const BigInt& c) { return c >= 0; });
    if (!nonneg || f.eval(1) <= 0) rep.factors_positive = false;
  }
  if (!rep.factors_positive) {
    throw verification_error("a factor of the difference is not positive for k >= 1");
  }
  return rep;
}

std::vector<ScalingCheck> verify_scaling_chain(const std::vector<long>& k_samples) {
  const IntPoly dp = build_d_prime();
  const IntPoly ep = build_e_prime();
  std::vector<ScalingCheck> out;
  out.reserve(k_samples.size());
  for (long k : k_samples) {
    if (k < 1) throw std::invalid_argument("scaling chain samples require k >= 1");
    const BigInt num = factorial(2 * k) * factorial(2 * k + 5) * BigInt(2 * k + 1) *
                       BigInt(2 * k + 2) * BigInt(2 * k + 3);
    const BigRat scale(num, factorial(4 * k + 2));
    if (scale <= 0) {
      throw verification_error("scale is not positive at k = " + std::to_string(k));
    }
    if (BigRat(dp.eval(k)) != BigRat(counting::d_val(k)) * scale) {
      throw verification_error("d' disagrees with scaled d at k = " + std::to_string(k));
    }
    if (BigRat(ep.eval(k)) != BigRat(counting::e_val(k)) * scale) {
      throw verification_error("e' disagrees with scaled e at k = " + std::to_string(k));
    }
    out.push_back({k, scale});
  }
  return out;
}

}  // namespace grassmax::polyring
