#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zp/harness/config.hpp"
#include "zp/residue_set.hpp"
#include "zp/setops.hpp"

namespace zp::harness {

enum class SearchCriterion {
  cd_equality,  // |A+B| = |A|+|B|-1
  near_3k3,     // |2A| = 3k-4
  hsz_tight,    // standard hsz gate holds with |C| = r+2
};

constexpr std::string_view to_string(SearchCriterion c) {
  switch (c) {
    case SearchCriterion::cd_equality: return "cd_equality";
    case SearchCriterion::near_3k3: return "near_3k3";
    case SearchCriterion::hsz_tight: return "hsz_tight";
  }
  return "unknown";
}

inline SearchCriterion parse_criterion(std::string_view s) {
  for (auto c : {SearchCriterion::cd_equality, SearchCriterion::near_3k3, SearchCriterion::hsz_tight})
    if (to_string(c) == s) return c;
  throw Error(Errc::unknown_criterion, "unknown search criterion '" + std::string(s) + "'");
}

constexpr bool is_pair_criterion(SearchCriterion c) { return c != SearchCriterion::near_3k3; }

struct Extremal {
  ResidueSet a;
  std::optional<ResidueSet> b;

  std::string to_string() const { return b ? a.to_string() + " " + b->to_string() : a.to_string(); }
};

using SortedMembers = std::vector<Residue>;

/// Least sorted member list among the translates of S. It starts with 0.
inline SortedMembers least_translate(const ResidueSet& s) {
  const PrimeModulus m = s.modulus();
  const SortedMembers members = s.members();
  SortedMembers best;
  SortedMembers cur(members.size());
  for (Residue pivot : members) {
    for (std::size_t i = 0; i < members.size(); ++i) cur[i] = m.sub(members[i], pivot);
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

inline SortedMembers dilate_sorted(const ResidueSet& s, Residue x) {
  const PrimeModulus m = s.modulus();
  ResidueSet out(m);
  s.for_each([&](Residue r) { out.insert(m.mul(r, x)); });
  return least_translate(out);
}

/// Lexicographically least image of A under the affine group: 0 in A, then
/// the smallest possible second element, and so on.
inline ResidueSet canonical_form(const ResidueSet& a) {
  SortedMembers best;
  for (Residue x = 1; x < a.p(); ++x) {
    SortedMembers cur = dilate_sorted(a, x);
    if (best.empty() || cur < best) best = std::move(cur);
  }
  return ResidueSet::from_members(a.modulus(), best);
}

/// Least (A', B') with A' = xA + y, B' = xB + y' over a common scale x and
/// independent shifts.
inline std::pair<ResidueSet, ResidueSet> canonical_pair(const ResidueSet& a, const ResidueSet& b) {
  std::pair<SortedMembers, SortedMembers> best;
  for (Residue x = 1; x < a.p(); ++x) {
    auto cur = std::make_pair(dilate_sorted(a, x), dilate_sorted(b, x));
    if (best.first.empty() || cur < best) best = std::move(cur);
  }
  return {ResidueSet::from_members(a.modulus(), best.first), ResidueSet::from_members(b.modulus(), best.second)};
}

struct SearchConfig {
  PrimeModulus p;
  SearchCriterion criterion;
  SizeFilter filters{};
};

/// All canonical witnesses of `criterion` at modulus p, deduplicated under
/// the affine group and listed in increasing canonical order. Only
/// translation representatives (0 in A, 0 in B) are scanned since every
/// orbit has one.
inline std::vector<Extremal> extremal_search(const SearchConfig& cfg) {
  const PrimeModulus m = cfg.p;
  const std::uint32_t p = m.value();
  const std::uint64_t reps = std::uint64_t{1} << (p - 1);  // subsets containing 0
  const std::uint64_t space = is_pair_criterion(cfg.criterion) ? reps * reps : reps;
  if (p >= 40 || space > kMaxExhaustiveSpace)
    throw Error(Errc::space_too_large, "search space too large at p=" + std::to_string(p));

  const auto& f = cfg.filters;
  std::set<std::pair<SortedMembers, SortedMembers>> seen;
  for (std::uint64_t ra = 0; ra < reps; ++ra) {
    const ResidueSet a = ResidueSet::from_mask(m, 1 | (ra << 1));
    const auto ka = static_cast<std::int64_t>(a.size());
    if (!f.accepts_a(a.size())) continue;
    if (cfg.criterion == SearchCriterion::near_3k3) {
      if (static_cast<std::int64_t>(doubled(a).size()) == 3 * ka - 4)
        seen.emplace(canonical_form(a).members(), SortedMembers{});
      continue;
    }
    for (std::uint64_t rb = 0; rb < reps; ++rb) {
      const ResidueSet b = ResidueSet::from_mask(m, 1 | (rb << 1));
      if (!f.accepts_b(b.size())) continue;
      const auto kb = static_cast<std::int64_t>(b.size());
      const auto s = static_cast<std::int64_t>(sumset(a, b).size());
      bool hit = false;
      if (cfg.criterion == SearchCriterion::cd_equality) {
        hit = s == ka + kb - 1;
      } else {
        const std::int64_t r = s - ka - kb + 1;
        const std::int64_t c = p - s;
        hit = c > 0 && r >= 0 && c == r + 2 && ka >= r + 3 && kb >= r + 3;
      }
      if (hit) {
        auto [ca, cb] = canonical_pair(a, b);
        seen.emplace(ca.members(), cb.members());
      }
    }
  }

  std::vector<Extremal> out;
  out.reserve(seen.size());
  for (const auto& [sa, sb] : seen) {
    Extremal e{ResidueSet::from_members(m, sa), std::nullopt};
    if (is_pair_criterion(cfg.criterion)) e.b = ResidueSet::from_members(m, sb);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace zp::harness
