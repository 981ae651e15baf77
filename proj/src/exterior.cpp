#include "grassmax/exterior.hpp"

#include <stdexcept>
#include <utility>

namespace grassmax {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldDesc FieldDesc::gf(std::uint32_t p) {
  if (p == 2)
    throw std::invalid_argument("FieldDesc::gf: characteristic 2 is not allowed");
  if (!is_prime(p))
    throw std::invalid_argument("FieldDesc::gf: modulus " + std::to_string(p) + " is not prime");
  return FieldDesc{p};
}

BigRat field_normalize(const BigRat& v, const FieldDesc& f) {
  if (f.is_rational()) return v;
  // v arrives with denominator 1 or a unit mod p; fold the inverse in.
  BigInt num = numerator(v) % f.modulus;
  BigInt den = denominator(v) % f.modulus;
  if (num < 0) num += f.modulus;
  if (den < 0) den += f.modulus;
  if (den == 0) throw std::domain_error("field_normalize: denominator divisible by p");
  if (den != 1) num = num * numerator(field_inverse(BigRat(den), f)) % f.modulus;
  return BigRat(num);
}

BigRat field_inverse(const BigRat& v, const FieldDesc& f) {
  if (v == 0) throw std::domain_error("field_inverse: zero has no inverse");
  if (f.is_rational()) return BigRat(1) / v;
  std::int64_t a = static_cast<std::int64_t>(numerator(field_normalize(v, f)));
  std::int64_t p = f.modulus;
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("field_inverse: not a unit mod p");
  if (t < 0) t += p;
  return BigRat(t);
}

AlgebraContext::AlgebraContext(int rank, FieldDesc f) : n(rank), field(f) {
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("AlgebraContext: rank must be in [1, " +
                                std::to_string(kMaxRank) + "], got " + std::to_string(rank));
  if (f.modulus == 2)
    throw std::invalid_argument("AlgebraContext: characteristic 2 is not allowed");
}

void require_same_context(const AlgebraContext& a, const AlgebraContext& b) {
  if (!(a == b)) throw std::invalid_argument("operands live in different algebra contexts");
}

MonomialProduct mul_monomials(Mask a, Mask b, const AlgebraContext& ctx) {
  if (a > ctx.full_mask() || b > ctx.full_mask())
    throw std::invalid_argument("mul_monomials: mask outside the context's rank");
  if (a & b) return {0, 0};
  // crossings: for each generator i of a, the generators of b below it
  int inv = 0;
  for (Mask rest = a; rest;) {
    Mask low = rest & (rest - 1);
    Mask bit = rest ^ low;  // lowest set bit of rest
    inv += std::popcount(b & (bit - 1));
    rest = low;
  }
  return {(inv & 1) ? -1 : +1, a | b};
}

Element Element::monomial(const AlgebraContext& ctx, Mask m, const BigRat& coeff) {
  if (m > ctx.full_mask())
    throw std::invalid_argument("Element::monomial: mask outside the context's rank");
  Element e(ctx);
  e.add_term(m, coeff);
  return e;
}

Mask Element::leading_mask() const {
  if (terms_.empty()) throw std::logic_error("leading_mask of zero element");
  return terms_.begin()->first;
}

BigRat Element::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRat(0) : it->second;
}

void Element::add_term(Mask m, const BigRat& c) {
  BigRat v = field_normalize(c, ctx_.field);
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(m, v);
  if (!inserted) {
    it->second = field_normalize(it->second + v, ctx_.field);
    if (it->second == 0) terms_.erase(it);
  }
}

Element add(const Element& a, const Element& b) {
  require_same_context(a.context(), b.context());
  Element r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

Element sub(const Element& a, const Element& b) {
  require_same_context(a.context(), b.context());
  Element r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
  return r;
}

Element scale(const Element& a, const BigRat& c) {
  Element r(a.context());
  for (const auto& [m, v] : a.terms()) r.add_term(m, v * c);
  return r;
}

Element multiply(const Element& a, const Element& b) {
  require_same_context(a.context(), b.context());
  Element r(a.context());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      MonomialProduct p = mul_monomials(ma, mb, a.context());
      if (p.sign != 0) {
        BigRat term = ca * cb;
        if (p.sign < 0) term = -term;
        r.add_term(p.product, term);
      }
    }
  return r;
}

Element commutator(const Element& a, const Element& b) {
  return sub(multiply(a, b), multiply(b, a));
}

std::vector<Mask> even_part_basis(const AlgebraContext& ctx) {
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << (ctx.n - 1));
  for (Mask m = 0; m <= ctx.full_mask(); ++m)
    if ((degree(m) & 1) == 0) out.push_back(m);
  return out;
}

std::string monomial_str(Mask m) {
  if (m == 0) return "1";
  std::string s;
  for (int i = 0; m >> i; ++i)
    if ((m >> i) & 1) s += "x" + std::to_string(i + 1);
  return s;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*" + monomial_str(m);
  }
  return s;
}

}  // namespace grassmax
