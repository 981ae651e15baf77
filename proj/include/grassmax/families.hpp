#ifndef GRASSMAX_FAMILIES_HPP
#define GRASSMAX_FAMILIES_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassmax/centralizer.hpp"
#include "grassmax/exterior.hpp"

namespace grassmax {

// Family of distinct odd-popcount subsets of [n], members sorted ascending.
class OddFamily {
 public:
  OddFamily(int n, std::vector<Mask> members);

  int ground_set_size() const { return n_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask m) const;
  Mask full_mask() const { return static_cast<Mask>((std::uint64_t{1} << n_) - 1); }

  friend bool operator==(const OddFamily&, const OddFamily&) = default;

 private:
  int n_;
  std::vector<Mask> members_;
};

// All odd-popcount masks below 2^n, ascending.
std::vector<Mask> odd_masks(int n);

// All odd masks containing the given element (1-based); maximal of size 2^{n-2}.
OddFamily star_family(int n, int element);

class not_intersecting_error : public verification_error {
 public:
  not_intersecting_error(Mask a, Mask b);
  std::pair<Mask, Mask> witness() const { return {a_, b_}; }

 private:
  Mask a_, b_;
};

struct IntersectingVerdict {
  bool intersecting;
  std::optional<std::pair<Mask, Mask>> disjoint_pair;  // first witness in member order
};

IntersectingVerdict is_intersecting(const OddFamily& f);

enum class ExecMode { serial, openmp };

// reach(U) = "some family member is a subset of U", for every U < 2^n,
// built by the superset zeta transform in O(n 2^n) bit-parallel steps.
// An odd T is addable to F exactly when T is not a member and
// reach(complement(T)) is false. Guard: n <= 26.
class SubsetReach {
 public:
  SubsetReach(int n, const std::vector<Mask>& members, ExecMode mode = ExecMode::serial);

  bool hit(Mask u) const { return (words_[u >> 6] >> (u & 63)) & 1; }
  // mark s and every superset (incremental completion support)
  void add_member(Mask s);
  int n() const { return n_; }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

struct FamilyMaximality {
  bool maximal;
  std::optional<Mask> addable;  // smallest addable odd mask when not maximal
};

// Reference implementation: scans every odd T and every member.
FamilyMaximality is_maximal_family_naive(const OddFamily& f);
// Same verdict and witness via the reach table. Guard: n <= 26.
FamilyMaximality is_maximal_family_fast(const OddFamily& f, ExecMode mode = ExecMode::serial);

// Maximal superfamily, admitting addable masks in ascending order.
OddFamily complete_family(const OddFamily& f);

// All maximal intersecting odd families on [n], n <= 5, in ascending
// order of the member-index subset (deterministic, duplicate-free).
std::vector<OddFamily> enumerate_maximal_families(int n);

// Span of the even part plus the family's odd monomials;
// dim = 2^{n-1} + |F|. Requires ctx.n == F.n, n <= 10.
Subspace family_to_subalgebra(const OddFamily& f, const AlgebraContext& ctx);

// --- family file format ---
// line 1: n=<decimal>; then one decimal mask per line; '#' starts a comment.
class family_parse_error : public std::runtime_error {
 public:
  family_parse_error(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

OddFamily read_family(std::istream& in);
OddFamily read_family_file(const std::string& path);
void write_family(std::ostream& out, const OddFamily& f);
void write_family_file(const std::string& path, const OddFamily& f);

}  // namespace grassmax

#endif
