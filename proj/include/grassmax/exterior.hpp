#ifndef GRASSMAX_EXTERIOR_HPP
#define GRASSMAX_EXTERIOR_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grassmax/bignum.hpp"

namespace grassmax {

// Basis monomial x_S of G(n), encoded as an n-bit subset mask of [n].
// Bit i set means the generator x_{i+1} appears; generators are stored
// in increasing index order, so popcount(mask) is the degree.
using Mask = std::uint32_t;

inline int degree(Mask m) { return std::popcount(m); }

// Largest supported number of generators; the full-set mask must fit in 32 bits.
inline constexpr int kMaxRank = 30;

// Coefficient field: exact rationals (modulus 0) or GF(p) for an odd prime p.
// GF(2) is rejected everywhere; the defining relations collapse there.
struct FieldDesc {
  std::uint32_t modulus = 0;

  bool is_rational() const { return modulus == 0; }
  static FieldDesc rationals() { return FieldDesc{0}; }
  static FieldDesc gf(std::uint32_t p);

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

// Reduce v into canonical form for the field: untouched over Q,
// the integer residue in [0, p) over GF(p).
BigRat field_normalize(const BigRat& v, const FieldDesc& f);
// Multiplicative inverse of a nonzero scalar.
BigRat field_inverse(const BigRat& v, const FieldDesc& f);

// Ambient algebra G(n) over a fixed field. Element arithmetic is capped at
// n <= 30 so a monomial always fits one machine word; the counting side of
// the library never materializes G(n) and has no such cap.
struct AlgebraContext {
  int n;
  FieldDesc field;

  explicit AlgebraContext(int rank, FieldDesc f = FieldDesc::rationals());

  Mask full_mask() const { return static_cast<Mask>((std::uint64_t{1} << n) - 1); }
  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;
};

struct MonomialProduct {
  int sign;      // +1, -1, or 0 when the supports overlap
  Mask product;  // a | b; meaningful only when sign != 0
};

// x_A * x_B. Zero when the supports share a generator (squares vanish),
// otherwise x_{A|B} with sign (-1)^inv, inv = #{(i,j) : i in A, j in B, i > j},
// the crossings when merging the two sorted generator words.
MonomialProduct mul_monomials(Mask a, Mask b, const AlgebraContext& ctx);

// Sparse exact linear combination of monomials in canonical form:
// no stored coefficient is zero, coefficients are field-normalized,
// and equality is equality of term maps.
class Element {
 public:
  explicit Element(AlgebraContext ctx) : ctx_(ctx) {}
  static Element zero(const AlgebraContext& ctx) { return Element(ctx); }
  static Element one(const AlgebraContext& ctx) { return monomial(ctx, 0); }
  static Element monomial(const AlgebraContext& ctx, Mask m, const BigRat& coeff = 1);

  const AlgebraContext& context() const { return ctx_; }
  const std::map<Mask, BigRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Smallest monomial present; only valid on nonzero elements.
  Mask leading_mask() const;
  BigRat coeff(Mask m) const;

  void add_term(Mask m, const BigRat& c);  // accumulate, dropping zeros

  friend bool operator==(const Element&, const Element&) = default;

 private:
  AlgebraContext ctx_;
  std::map<Mask, BigRat> terms_;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Element& a, const BigRat& c);
Element multiply(const Element& a, const Element& b);
// ab - ba
Element commutator(const Element& a, const Element& b);

// The 2^{n-1} even-degree monomials, masks ascending.
std::vector<Mask> even_part_basis(const AlgebraContext& ctx);

// "x1x3" style rendering; the empty monomial prints as "1".
std::string monomial_str(Mask m);
std::string to_string(const Element& e);

void require_same_context(const AlgebraContext& a, const AlgebraContext& b);

}  // namespace grassmax

#endif
