#include "grassmax/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grassmax {

namespace {

constexpr int kMaxReachRank = 26;

void require_reach_rank(int n) {
  if (n > kMaxReachRank) {
    throw std::invalid_argument("reach table requires n <= " +
                                std::to_string(kMaxReachRank) + ", got n = " +
                                std::to_string(n));
  }
}

std::string mask_str(Mask m) { return std::to_string(static_cast<std::uint32_t>(m)); }

}  // namespace

OddFamily::OddFamily(int n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {
  if (n_ < 1 || n_ > kMaxRank) {
    throw std::invalid_argument("ground set size must be in [1, " +
                                std::to_string(kMaxRank) + "], got " + std::to_string(n_));
  }
  std::sort(members_.begin(), members_.end());
  const Mask full = full_mask();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Mask m = members_[i];
    if (m > full) {
      throw std::invalid_argument("member " + mask_str(m) + " exceeds the ground set of size " +
                                  std::to_string(n_));
    }
    if (degree(m) % 2 == 0) {
      throw std::invalid_argument("member " + mask_str(m) + " has even popcount");
    }
    if (i > 0 && members_[i - 1] == m) {
      throw std::invalid_argument("duplicate member " + mask_str(m));
    }
  }
}

bool OddFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

std::vector<Mask> odd_masks(int n) {
  std::vector<Mask> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  out.reserve(static_cast<std::size_t>(limit / 2));
  for (std::uint64_t m = 1; m < limit; ++m) {
    if (std::popcount(m) % 2 == 1) out.push_back(static_cast<Mask>(m));
  }
  return out;
}

OddFamily star_family(int n, int element) {
  if (element < 1 || element > n) {
    throw std::invalid_argument("star element must be in [1, n]");
  }
  const Mask bit = Mask{1} << (element - 1);
  std::vector<Mask> members;
  for (Mask m : odd_masks(n)) {
    if (m & bit) members.push_back(m);
  }
  return OddFamily(n, std::move(members));
}

not_intersecting_error::not_intersecting_error(Mask a, Mask b)
    : verification_error("family is not intersecting: members " + mask_str(a) + " and " +
                         mask_str(b) + " are disjoint"),
      a_(a),
      b_(b) {}

IntersectingVerdict is_intersecting(const OddFamily& f) {
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if ((m[i] & m[j]) == 0) {
        return {false, std::make_pair(m[i], m[j])};
      }
    }
  }
  return {true, std::nullopt};
}

SubsetReach::SubsetReach(int n, const std::vector<Mask>& members, ExecMode mode) : n_(n) {
  require_reach_rank(n);
  if (n < 1) throw std::invalid_argument("reach table requires n >= 1");
  const std::size_t bits = std::size_t{1} << n;
  words_.assign(bits <= 64 ? 1 : bits / 64, 0);
  for (Mask s : members) {
    words_[s >> 6] |= std::uint64_t{1} << (s & 63);
  }

  // Positions with bit i clear, for the six in-word levels.
  static constexpr std::uint64_t kClear[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
      0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
  };

  const std::int64_t word_count = static_cast<std::int64_t>(words_.size());
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const std::uint64_t clear = kClear[i];
      const int shift = 1 << i;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (mode == ExecMode::openmp && word_count >= 1024)
#endif
      for (std::int64_t j = 0; j < word_count; ++j) {
        words_[j] |= (words_[j] & clear) << shift;
      }
    } else {
      // Word-level step: OR the word whose index has bit (i-6) clear into
      // its partner with the bit set. Writes touch only high-bit words, so
      // every level is safe to run concurrently.
      const std::int64_t stride = std::int64_t{1} << (i - 6);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (mode == ExecMode::openmp && word_count >= 1024)
#endif
      for (std::int64_t j = 0; j < word_count; ++j) {
        if (j & stride) words_[j] |= words_[j ^ stride];
      }
    }
  }
  (void)mode;
}

void SubsetReach::add_member(Mask s) {
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n_) - 1);
  if (s > full) throw std::invalid_argument("mask exceeds the ground set");
  const Mask comp = full ^ s;
  Mask sub = comp;
  while (true) {
    const Mask u = s | sub;
    words_[u >> 6] |= std::uint64_t{1} << (u & 63);
    if (sub == 0) break;
    sub = (sub - 1) & comp;
  }
}

namespace {

void require_intersecting(const OddFamily& f) {
  const IntersectingVerdict v = is_intersecting(f);
  if (!v.intersecting) {
    throw not_intersecting_error(v.disjoint_pair->first, v.disjoint_pair->second);
  }
}

}  // namespace

FamilyMaximality is_maximal_family_naive(const OddFamily& f) {
  require_intersecting(f);
  const auto& members = f.members();
  for (Mask t : odd_masks(f.ground_set_size())) {
    if (f.contains(t)) continue;
    bool meets_all = true;
    for (Mask s : members) {
      if ((t & s) == 0) {
        meets_all = false;
        break;
      }
    }
    if (meets_all) return {false, t};
  }
  return {true, std::nullopt};
}

FamilyMaximality is_maximal_family_fast(const OddFamily& f, ExecMode mode) {
  const int n = f.ground_set_size();
  require_reach_rank(n);
  const Mask full = f.full_mask();
  const SubsetReach reach(n, f.members(), mode);

  // A member disjoint from another member shows up as a member inside its
  // own complement; a mask is never a subset of its complement, so any hit
  // certifies a genuinely disjoint pair.
  for (Mask s : f.members()) {
    if (reach.hit(full ^ s)) {
      require_intersecting(f);  // recover the first disjoint pair and throw
    }
  }

  const std::size_t bits = std::size_t{1} << n;
  std::vector<std::uint64_t> member_bits(bits <= 64 ? 1 : bits / 64, 0);
  for (Mask s : f.members()) member_bits[s >> 6] |= std::uint64_t{1} << (s & 63);

  const std::int64_t limit = std::int64_t{1} << n;
  std::uint32_t best = UINT32_MAX;
  if (mode == ExecMode::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best)
#endif
    for (std::int64_t t = 1; t < limit; ++t) {
      const Mask m = static_cast<Mask>(t);
      if (std::popcount(static_cast<std::uint32_t>(m)) % 2 != 1) continue;
      if ((member_bits[m >> 6] >> (m & 63)) & 1) continue;
      if (reach.hit(full ^ m)) continue;
      if (static_cast<std::uint32_t>(m) < best) best = static_cast<std::uint32_t>(m);
    }
  } else {
    for (std::int64_t t = 1; t < limit; ++t) {
      const Mask m = static_cast<Mask>(t);
      if (std::popcount(static_cast<std::uint32_t>(m)) % 2 != 1) continue;
      if ((member_bits[m >> 6] >> (m & 63)) & 1) continue;
      if (!reach.hit(full ^ m)) {
        best = static_cast<std::uint32_t>(m);
        break;
      }
    }
  }
  if (best == UINT32_MAX) return {true, std::nullopt};
  return {false, static_cast<Mask>(best)};
}

OddFamily complete_family(const OddFamily& f) {
  require_intersecting(f);
  const int n = f.ground_set_size();
  require_reach_rank(n);
  const Mask full = f.full_mask();

  std::vector<bool> in_family(std::size_t{1} << n, false);
  for (Mask s : f.members()) in_family[s] = true;
  SubsetReach reach(n, f.members());

  // Addability only shrinks as members are admitted, so one ascending pass
  // reaches a maximal family and later passes would admit nothing new.
  std::vector<Mask> members = f.members();
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t t = 1; t < limit; ++t) {
    const Mask m = static_cast<Mask>(t);
    if (std::popcount(static_cast<std::uint32_t>(m)) % 2 != 1) continue;
    if (in_family[m]) continue;
    if (!reach.hit(full ^ m)) {
      in_family[m] = true;
      members.push_back(m);
      reach.add_member(m);
    }
  }
  return OddFamily(n, std::move(members));
}

std::vector<OddFamily> enumerate_maximal_families(int n) {
  if (n < 1 || n > 5) {
    throw std::invalid_argument("enumeration is exhaustive over 2^(2^(n-1)) candidates; n <= 5");
  }
  const std::vector<Mask> om = odd_masks(n);
  std::vector<OddFamily> out;
  const std::uint64_t limit = std::uint64_t{1} << om.size();
  for (std::uint64_t sub = 1; sub < limit; ++sub) {
    std::vector<Mask> members;
    for (std::size_t i = 0; i < om.size(); ++i) {
      if (sub & (std::uint64_t{1} << i)) members.push_back(om[i]);
    }
    OddFamily cand(n, std::move(members));
    if (!is_intersecting(cand).intersecting) continue;
    if (is_maximal_family_naive(cand).maximal) out.push_back(std::move(cand));
  }
  return out;
}

Subspace family_to_subalgebra(const OddFamily& f, const AlgebraContext& ctx) {
  if (ctx.n != f.ground_set_size()) {
    throw std::invalid_argument("family ground set size " +
                                std::to_string(f.ground_set_size()) +
                                " does not match algebra rank " + std::to_string(ctx.n));
  }
  std::vector<Element> gens;
  const std::vector<Mask> even = even_part_basis(ctx);
  gens.reserve(even.size() + f.size());
  for (Mask m : even) gens.push_back(Element::monomial(ctx, m));
  for (Mask m : f.members()) gens.push_back(Element::monomial(ctx, m));
  return Subspace::span(gens, ctx);
}

family_parse_error::family_parse_error(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string strip(const std::string& raw) {
  std::string s = raw;
  if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_decimal(const std::string& text, int line, const char* what) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw family_parse_error(line, std::string("expected a decimal ") + what + ", got '" +
                                       text + "'");
  }
  return value;
}

}  // namespace

OddFamily read_family(std::istream& in) {
  std::string raw;
  int line = 0;
  int n = -1;
  std::vector<Mask> members;
  std::map<Mask, int> first_line;
  Mask full = 0;

  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip(raw);
    if (text.empty()) continue;
    if (n < 0) {
      if (text.size() < 2 || text[0] != 'n' || text[1] != '=') {
        throw family_parse_error(line, "expected header 'n=<decimal>', got '" + text + "'");
      }
      const std::uint64_t value = parse_decimal(text.substr(2), line, "ground set size");
      if (value < 1 || value > static_cast<std::uint64_t>(kMaxRank)) {
        throw family_parse_error(line, "ground set size must be in [1, " +
                                           std::to_string(kMaxRank) + "], got " + text.substr(2));
      }
      n = static_cast<int>(value);
      full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
      continue;
    }
    const std::uint64_t value = parse_decimal(text, line, "mask");
    if (value > full) {
      throw family_parse_error(line, "mask " + std::to_string(value) +
                                         " exceeds the ground set of size " + std::to_string(n));
    }
    const Mask m = static_cast<Mask>(value);
    if (std::popcount(static_cast<std::uint32_t>(m)) % 2 != 1) {
      throw family_parse_error(line, "mask " + std::to_string(value) + " has even popcount");
    }
    const auto [it, inserted] = first_line.emplace(m, line);
    if (!inserted) {
      throw family_parse_error(line, "duplicate mask " + std::to_string(value) +
                                         " (first seen on line " + std::to_string(it->second) +
                                         ")");
    }
    members.push_back(m);
  }
  if (n < 0) throw family_parse_error(line, "missing header 'n=<decimal>'");
  return OddFamily(n, std::move(members));
}

OddFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file '" + path + "'");
  return read_family(in);
}

void write_family(std::ostream& out, const OddFamily& f) {
  out << "n=" << f.ground_set_size() << '\n';
  for (Mask m : f.members()) out << static_cast<std::uint32_t>(m) << '\n';
}

void write_family_file(const std::string& path, const OddFamily& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open family file '" + path + "' for writing");
  write_family(out, f);
}

}  // namespace grassmax
