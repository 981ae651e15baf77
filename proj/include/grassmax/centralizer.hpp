#ifndef GRASSMAX_CENTRALIZER_HPP
#define GRASSMAX_CENTRALIZER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "grassmax/exterior.hpp"

namespace grassmax {

// The input to a maximality certification was not a commutative subalgebra.
class not_commutative_error : public verification_error {
 public:
  not_commutative_error(Element a, Element b);
  const Element& lhs() const { return *a_; }
  const Element& rhs() const { return *b_; }

 private:
  std::shared_ptr<Element> a_, b_;  // shared so the exception stays copyable
};

class not_closed_error : public verification_error {
 public:
  not_closed_error(Element a, Element b, Element product);
  const Element& lhs() const { return *a_; }
  const Element& rhs() const { return *b_; }
  const Element& escaping_product() const { return *p_; }

 private:
  std::shared_ptr<Element> a_, b_, p_;
};

// Linear subspace of G(n) held as a reduced echelon basis: pivots are the
// smallest monomial masks, ascending, each pivot coefficient 1 and absent
// from every other basis vector. Canonical, so equal spans compare equal.
class Subspace {
 public:
  // Echelon basis of the linear span. Guard: n <= 12.
  static Subspace span(const std::vector<Element>& elems, const AlgebraContext& ctx);

  const AlgebraContext& context() const { return ctx_; }
  const std::vector<Element>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // Remainder of v after eliminating every pivot; zero iff v is in the span.
  Element reduce(Element v) const;
  bool contains(const Element& v) const { return reduce(v).is_zero(); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(AlgebraContext ctx) : ctx_(ctx) {}
  // insert echelon-reducing against the current basis; false if dependent
  bool insert(Element v);

  AlgebraContext ctx_;
  std::vector<Element> basis_;
};

// Smallest subalgebra containing the generators (and 1 when include_unit),
// grown by multiplying basis pairs until the span is stable. Guard: n <= 10.
Subspace subalgebra_closure(const std::vector<Element>& gens, const AlgebraContext& ctx,
                            bool include_unit = true);

// All v in G(n) with [v, b] = 0 for every basis vector b of sub, computed by
// intersecting the kernels of the commutator-action maps one b at a time.
// Guard: n <= 10.
Subspace centralizer_of(const Subspace& sub);

struct MaximalityVerdict {
  bool maximal;
  // Nonzero element of Cent(A) \ A when not maximal; already reduced
  // against A's basis and pivot-normalized.
  std::optional<Element> witness;
};

// A maximal commutative <=> Cent(A) = A. Verifies commutativity and
// multiplicative closure first and throws not_commutative_error /
// not_closed_error when the input is not a commutative subalgebra.
MaximalityVerdict is_maximal_commutative(const Subspace& sub);

}  // namespace grassmax

#endif
