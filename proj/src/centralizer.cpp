#include "grassmax/centralizer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace grassmax {

namespace {

void require_rank_at_most(const AlgebraContext& ctx, int cap, const char* where) {
  if (ctx.n > cap)
    throw std::invalid_argument(std::string(where) + ": rank " + std::to_string(ctx.n) +
                                " exceeds the guard n <= " + std::to_string(cap));
}

}  // namespace

not_commutative_error::not_commutative_error(Element a, Element b)
    : verification_error("input is not commutative: [" + to_string(a) + ", " +
                         to_string(b) + "] != 0"),
      a_(std::make_shared<Element>(std::move(a))),
      b_(std::make_shared<Element>(std::move(b))) {}

not_closed_error::not_closed_error(Element a, Element b, Element product)
    : verification_error("input is not multiplicatively closed: (" + to_string(a) + ")*(" +
                         to_string(b) + ") escapes the span"),
      a_(std::make_shared<Element>(std::move(a))),
      b_(std::make_shared<Element>(std::move(b))),
      p_(std::make_shared<Element>(std::move(product))) {}

Element Subspace::reduce(Element v) const {
  require_same_context(v.context(), ctx_);
  // pivots ascend, and no pivot mask reappears in another basis vector,
  // so one pass eliminates everything it can
  for (const Element& b : basis_) {
    BigRat c = v.coeff(b.leading_mask());
    if (c != 0) v = sub(v, scale(b, c));
  }
  return v;
}

bool Subspace::insert(Element v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  v = scale(v, field_inverse(v.terms().begin()->second, ctx_.field));
  Mask pivot = v.leading_mask();
  for (Element& b : basis_) {
    BigRat c = b.coeff(pivot);
    if (c != 0) b = sub(b, scale(v, c));
  }
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), pivot,
                              [](const Element& e, Mask m) { return e.leading_mask() < m; });
  basis_.insert(pos, std::move(v));
  return true;
}

Subspace Subspace::span(const std::vector<Element>& elems, const AlgebraContext& ctx) {
  require_rank_at_most(ctx, 12, "span");
  Subspace s(ctx);
  for (const Element& e : elems) {
    require_same_context(e.context(), ctx);
    s.insert(e);
  }
  return s;
}

Subspace subalgebra_closure(const std::vector<Element>& gens, const AlgebraContext& ctx,
                            bool include_unit) {
  require_rank_at_most(ctx, 10, "subalgebra_closure");
  std::vector<Element> seed = gens;
  if (include_unit) seed.push_back(Element::one(ctx));
  Subspace cur = Subspace::span(seed, ctx);
  for (;;) {
    std::vector<Element> next = cur.basis();
    for (const Element& a : cur.basis())
      for (const Element& b : cur.basis()) next.push_back(multiply(a, b));
    Subspace grown = Subspace::span(next, ctx);
    if (grown.dim() == cur.dim()) return cur;
    cur = std::move(grown);
  }
}

Subspace centralizer_of(const Subspace& space) {
  const AlgebraContext& ctx = space.context();
  require_rank_at_most(ctx, 10, "centralizer_of");
  const FieldDesc& field = ctx.field;

  // Candidate basis, initially all of G(n); each pass with one subalgebra
  // basis vector b replaces it by a basis of ker(v -> [v, b]) within it.
  std::vector<Element> candidates;
  candidates.reserve(std::size_t{1} << ctx.n);
  for (Mask m = 0; m <= ctx.full_mask(); ++m)
    candidates.push_back(Element::monomial(ctx, m));

  for (const Element& b : space.basis()) {
    if (candidates.empty()) break;
    const std::size_t d = candidates.size();

    // Rows [w_j | e_j] with w_j = [candidate_j, b]; once a row's w-part is
    // eliminated, its augmented part is a kernel combination. The augmented
    // parts start as the identity, so collected combinations are independent.
    struct PivotRow {
      Element w;
      std::vector<BigRat> aug;
    };
    std::map<Mask, PivotRow> pivots;
    std::vector<std::vector<BigRat>> kernel;

    for (std::size_t j = 0; j < d; ++j) {
      Element w = commutator(candidates[j], b);
      std::vector<BigRat> aug(d, BigRat(0));
      aug[j] = 1;
      for (;;) {
        if (w.is_zero()) {
          kernel.push_back(std::move(aug));
          break;
        }
        Mask lead = w.leading_mask();
        auto it = pivots.find(lead);
        if (it == pivots.end()) {
          BigRat inv = field_inverse(w.terms().begin()->second, field);
          w = scale(w, inv);
          for (auto& a : aug)
            if (a != 0) a = field_normalize(a * inv, field);
          pivots.emplace(lead, PivotRow{std::move(w), std::move(aug)});
          break;
        }
        const PivotRow& p = it->second;
        BigRat c = w.coeff(lead);
        w = sub(w, scale(p.w, c));
        for (std::size_t i = 0; i < d; ++i)
          if (p.aug[i] != 0) aug[i] = field_normalize(aug[i] - c * p.aug[i], field);
      }
    }

    std::vector<Element> next;
    next.reserve(kernel.size());
    for (const auto& combo : kernel) {
      Element v(ctx);
      for (std::size_t j = 0; j < d; ++j)
        if (combo[j] != 0) v = add(v, scale(candidates[j], combo[j]));
      next.push_back(std::move(v));
    }
    candidates = std::move(next);
  }

  return Subspace::span(candidates, ctx);
}

MaximalityVerdict is_maximal_commutative(const Subspace& sub) {
  const auto& basis = sub.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!commutator(basis[i], basis[j]).is_zero())
        throw not_commutative_error(basis[i], basis[j]);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      Element p = multiply(basis[i], basis[j]);
      if (!sub.contains(p)) throw not_closed_error(basis[i], basis[j], std::move(p));
    }

  Subspace cent = centralizer_of(sub);
  if (cent.dim() < sub.dim())
    throw verification_error("centralizer smaller than a commutative input; echelon bug");
  if (cent.dim() == sub.dim()) return {true, std::nullopt};

  for (const Element& v : cent.basis()) {
    Element r = sub.reduce(v);
    if (!r.is_zero()) {
      r = scale(r, field_inverse(r.terms().begin()->second, sub.context().field));
      return {false, std::move(r)};
    }
  }
  throw verification_error("centralizer exceeds the input but yielded no witness");
}

}  // namespace grassmax
