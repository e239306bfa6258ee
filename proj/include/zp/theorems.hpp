#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zp/davenport.hpp"
#include "zp/error.hpp"
#include "zp/progression.hpp"
#include "zp/residue_set.hpp"
#include "zp/setops.hpp"
#include "zp/verdict.hpp"

namespace zp {

namespace detail {

inline std::int64_t isize(const ResidueSet& s) { return static_cast<std::int64_t>(s.size()); }

/// Shared quantities for pair checkers.
struct PairStats {
  ResidueSet sum;
  std::int64_t r;
  std::int64_t companion_size;
};

inline PairStats pair_stats(const ResidueSet& a, const ResidueSet& b) {
  ResidueSet s = sumset(a, b);
  const std::int64_t p = a.p();
  const std::int64_t ss = isize(s);
  return {std::move(s), ss - isize(a) - isize(b) + 1, p - ss};
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// |A+B| >= |A|+|B|-1 whenever A+B != Z/pZ.
inline TheoremVerdict cauchy_davenport(const ResidueSet& a, const ResidueSet& b) {
  auto st = detail::pair_stats(a, b);
  Instance inst{a, b, std::nullopt};
  if (st.sum.is_full()) return gate_not_met(TheoremId::cauchy_davenport, std::move(inst));
  TheoremVerdict v{TheoremId::cauchy_davenport, std::move(inst), st.r >= 0, {}};
  v.witness.deficiency = st.r;
  return v;
}

/// Unconditional form: |A+B| >= min(p, |A|+|B|-1).
inline bool cauchy_davenport_min_form(const ResidueSet& a, const ResidueSet& b) {
  const std::int64_t bound = std::min<std::int64_t>(a.p(), detail::isize(a) + detail::isize(b) - 1);
  return detail::isize(sumset(a, b)) >= bound;
}

/// If |{0,d} + A| <= |A| + 1 then A is a progression with difference +-d.
inline TheoremVerdict lemma2_two_point(const ResidueSet& a, Residue d) {
  const PrimeModulus m = a.modulus();
  d %= m.value();
  if (d == 0) throw Error(Errc::zero_difference, "lemma2 needs d != 0");
  if (a.size() < 2) throw Error(Errc::too_few_members, "lemma2 needs |A| >= 2");
  Instance inst{a, std::nullopt, d};
  const ResidueSet two_point = ResidueSet::from_members(m, {0, d});
  if (detail::isize(sumset(two_point, a)) > detail::isize(a) + 1)
    return gate_not_met(TheoremId::lemma2, std::move(inst));
  ApDescriptor cover = cover_with_difference(a, d);
  TheoremVerdict v{TheoremId::lemma2, std::move(inst), cover.length() == a.size(), {}};
  v.witness.difference = cover.difference();
  v.witness.cover_a = cover;
  return v;
}

/// r(A,B) = 0 with |B| >= 2 and |C| >= 2 forces A to be a progression.
inline TheoremVerdict vosper(const ResidueSet& a, const ResidueSet& b) {
  auto st = detail::pair_stats(a, b);
  Instance inst{a, b, std::nullopt};
  if (b.size() < 2 || st.companion_size < 2 || st.r != 0)
    return gate_not_met(TheoremId::vosper, std::move(inst));
  ApDescriptor cover = min_cover_ap(a);
  TheoremVerdict v{TheoremId::vosper, std::move(inst), cover.length() == a.size(), {}};
  v.witness.deficiency = 0;
  v.witness.difference = cover.difference();
  v.witness.cover_a = cover;
  return v;
}

enum class HszVariant {
  standard,    // |A| >= r+3, |B| >= r+3, |C| >= r+2
  conjecture,  // |A| >= r+2, |B| >= r+3, |C| >= r+3
};

/// Progressions of lengths |A|+r and |B|+r with one common difference cover
/// A and B. The witness carries the smallest such canonical difference and
/// both covers extended on the right to their exact claimed lengths.
inline TheoremVerdict hsz(const ResidueSet& a, const ResidueSet& b, HszVariant variant) {
  const TheoremId id = variant == HszVariant::standard ? TheoremId::hsz_standard : TheoremId::hsz_conjecture;
  auto st = detail::pair_stats(a, b);
  Instance inst{a, b, std::nullopt};
  const std::int64_t r = st.r, na = detail::isize(a), nb = detail::isize(b), nc = st.companion_size;
  const bool gate = variant == HszVariant::standard ? (na >= r + 3 && nb >= r + 3 && nc >= r + 2)
                                                    : (na >= r + 2 && nb >= r + 3 && nc >= r + 3);
  if (r < 0 || nc == 0 || !gate) return gate_not_met(id, std::move(inst));

  const PrimeModulus m = a.modulus();
  const auto len_a = static_cast<std::uint32_t>(na + r);
  const auto len_b = static_cast<std::uint32_t>(nb + r);
  for (Residue d = 1; d <= m.max_canonical_difference(); ++d) {
    CoverScan ca = cover_along(a, d);
    if (ca.length > len_a) continue;
    CoverScan cb = cover_along(b, d);
    if (cb.length > len_b) continue;
    TheoremVerdict v{id, std::move(inst), true, {}};
    v.witness.difference = d;
    v.witness.deficiency = r;
    v.witness.cover_a = ApDescriptor::make(m, ca.start, d, len_a);
    v.witness.cover_b = ApDescriptor::make(m, cb.start, d, len_b);
    return v;
  }
  TheoremVerdict v{id, std::move(inst), false, {}};
  v.witness.deficiency = r;
  v.witness.detail = "no common difference";
  return v;
}

/// diam(A) <= |A| + r when |B| >= r+3, |C| >= r+2 and A+B != Z/pZ.
inline TheoremVerdict theorem_con(const ResidueSet& a, const ResidueSet& b) {
  auto st = detail::pair_stats(a, b);
  Instance inst{a, b, std::nullopt};
  const std::int64_t r = st.r;
  if (st.companion_size == 0 || detail::isize(b) < r + 3 || st.companion_size < r + 2)
    return gate_not_met(TheoremId::theorem_con, std::move(inst));
  ApDescriptor cover = min_cover_ap(a);
  TheoremVerdict v{TheoremId::theorem_con, std::move(inst),
                   static_cast<std::int64_t>(cover.length()) <= detail::isize(a) + r, {}};
  v.witness.deficiency = r;
  v.witness.difference = cover.difference();
  v.witness.cover_a = cover;
  return v;
}

namespace detail {

inline TheoremVerdict short_cover_verdict(TheoremId id, const ResidueSet& a, std::int64_t doubled_size) {
  ApDescriptor cover = min_cover_ap(a);
  const std::int64_t bound = doubled_size - isize(a) + 1;
  TheoremVerdict v{id, Instance{a, std::nullopt, std::nullopt}, static_cast<std::int64_t>(cover.length()) <= bound, {}};
  v.witness.difference = cover.difference();
  v.witness.cover_a = cover;
  v.witness.detail = "|2A|=" + std::to_string(doubled_size);
  return v;
}

}  // namespace detail

/// |2A| < 3k-3 and k < p/4 + 3/2 imply a short cover.
inline TheoremVerdict freiman_3k3(const ResidueSet& a) {
  const std::int64_t k = detail::isize(a);
  const std::int64_t t = detail::isize(doubled(a));
  // k < p/4 + 3/2  <=>  4k < p + 6
  if (!(t < 3 * k - 3 && 4 * k < static_cast<std::int64_t>(a.p()) + 6))
    return gate_not_met(TheoremId::freiman_3k3, Instance{a, std::nullopt, std::nullopt});
  return detail::short_cover_verdict(TheoremId::freiman_3k3, a, t);
}

/// Exact nonnegative rational, parsed from "2.4", "12/5" or "35".
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(std::string_view s) {
    auto bad = [&] { return Error(Errc::bad_parameter, "not a rational: '" + std::string(s) + "'"); };
    auto to_int = [&](std::string_view t) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) throw bad();
      return v;
    };
    Rational q;
    if (auto slash = s.find('/'); slash != s.npos) {
      q = {to_int(s.substr(0, slash)), to_int(s.substr(slash + 1))};
    } else if (auto dot = s.find('.'); dot != s.npos) {
      std::string_view frac = s.substr(dot + 1);
      if (frac.empty() || frac.size() > 12) throw bad();
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      q = {to_int(s.substr(0, dot)) * scale + to_int(frac), scale};
    } else {
      q = {to_int(s), 1};
    }
    if (q.den <= 0) throw bad();
    std::int64_t g = std::gcd(q.num, q.den);
    if (g > 1) q = {q.num / g, q.den / g};
    return q;
  }

  std::string to_string() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Gate constants for the 2.4-type theorem: |2A| <= constant*k - 3 and
/// k < p / bound_divisor. Known divisors: 35 (original), 10.7, about 2.8.
struct Freiman24Params {
  Rational constant{12, 5};
  Rational bound_divisor{35, 1};

  void validate() const {
    if (constant.num <= 2 * constant.den) throw Error(Errc::bad_parameter, "constant must exceed 2");
    if (bound_divisor.num <= 0) throw Error(Errc::bad_parameter, "bound divisor must be positive");
  }
};

inline TheoremVerdict freiman_24(const ResidueSet& a, const Freiman24Params& params = {}) {
  params.validate();
  detail::require_nonempty(a, "freiman_24");
  const std::int64_t k = detail::isize(a);
  const std::int64_t t = detail::isize(doubled(a));
  const auto& c = params.constant;
  const auto& q = params.bound_divisor;
  const bool doubling_ok = t * c.den <= c.num * k - 3 * c.den;
  const bool size_ok = k * q.num < static_cast<std::int64_t>(a.p()) * q.den;
  if (!(doubling_ok && size_ok)) return gate_not_met(TheoremId::freiman_24, Instance{a, std::nullopt, std::nullopt});
  return detail::short_cover_verdict(TheoremId::freiman_24, a, t);
}

/// s >= min(p, 2k-3) where s counts sums of two distinct members.
inline TheoremVerdict erdos_heilbronn(const ResidueSet& a) {
  if (a.size() < 2) throw Error(Errc::too_few_members, "erdos_heilbronn needs |A| >= 2");
  const std::int64_t s = detail::isize(restricted_sumset(a));
  const std::int64_t bound = std::min<std::int64_t>(a.p(), 2 * detail::isize(a) - 3);
  TheoremVerdict v{TheoremId::erdos_heilbronn, Instance{a, std::nullopt, std::nullopt}, s >= bound, {}};
  v.witness.detail = "s=" + std::to_string(s);
  return v;
}

/// Affine map sending A onto integer representatives 0 = r_0 < ... < r_{k-1}
/// inside its shortest cover: x -> (x - start) / d.
inline AffineMap sum_chain_normalization(const ResidueSet& a) {
  const ApDescriptor cover = min_cover_ap(a);
  const PrimeModulus m = a.modulus();
  const Residue dinv = m.inverse(cover.difference());
  return AffineMap(m, dinv, m.neg(m.mul(dinv, cover.start())));
}

/// The 2k-3 sums r_0+r_1 < ... < r_0+r_{k-1} < r_1+r_{k-1} < ... <
/// r_{k-2}+r_{k-1}, reduced mod p, in normalized coordinates. They are
/// distinct whenever diam(A) <= 2k-3 and p >= 4k-5.
inline std::vector<Residue> distinct_sum_chain(const ResidueSet& a) {
  if (a.size() < 2) throw Error(Errc::too_few_members, "sum chain needs |A| >= 2");
  const PrimeModulus m = a.modulus();
  const ResidueSet normalized = affine_image(a, sum_chain_normalization(a));
  const std::vector<Residue> r = normalized.members();  // ascending, r[0] == 0
  const std::size_t k = r.size();
  std::vector<Residue> chain;
  chain.reserve(2 * k - 3);
  for (std::size_t i = 1; i < k; ++i) chain.push_back(m.add(r[0], r[i]));
  for (std::size_t i = 1; i + 1 < k; ++i) chain.push_back(m.add(r[i], r[k - 1]));
  return chain;
}

/// p + 1 - r = |A| + |B| + |C| when A + B != Z/pZ, together with the
/// triple-sum facts behind it: r(A,B) = r(B,A), A + B + C is exactly the
/// nonzero residues, and r(B,C) <= r(A,B) with equality iff A is the
/// companion of (B, C).
inline TheoremVerdict symmetry_identity(const ResidueSet& a, const ResidueSet& b) {
  auto st = detail::pair_stats(a, b);
  Instance inst{a, b, std::nullopt};
  if (st.sum.is_full()) return gate_not_met(TheoremId::symmetry, std::move(inst), "A+B full");
  const std::int64_t p = a.p();
  const ResidueSet c = negated(complement(st.sum));
  const std::int64_t r = st.r;
  std::string failed;
  if (p + 1 - r != detail::isize(a) + detail::isize(b) + detail::isize(c)) failed += "identity;";
  if (deficiency(b, a) != r) failed += "r(A,B)!=r(B,A);";
  ResidueSet nonzero = ResidueSet::full(a.modulus());
  nonzero.erase(0);
  if (!(sumset(st.sum, c) == nonzero)) failed += "A+B+C!=nonzero;";
  const std::int64_t r_bc = deficiency(b, c);
  const bool saturated = companion_set(b, c) == a;
  if (r_bc > r || (r_bc == r) != saturated) failed += "r(B,C);";
  TheoremVerdict v{TheoremId::symmetry, std::move(inst), failed.empty(), {}};
  v.witness.deficiency = r;
  v.witness.detail = failed.empty() ? "|C|=" + std::to_string(c.size()) : failed;
  return v;
}

/// Re-checks a positive verdict's witness from scratch: covers cover, claimed
/// lengths match, hsz covers share the witness difference.
inline bool revalidate(const TheoremVerdict& v) {
  if (!v.hypotheses_met() || !*v.conclusion) return true;
  const Witness& w = v.witness;
  const Instance& in = v.instance;
  if (w.cover_a && !w.cover_a->covers(in.a)) return false;
  if (w.cover_b && (!in.b || !w.cover_b->covers(*in.b))) return false;
  switch (v.theorem) {
    case TheoremId::hsz_standard:
    case TheoremId::hsz_conjecture: {
      if (!w.cover_a || !w.cover_b || !w.deficiency || !w.difference || !in.b) return false;
      const std::int64_t r = *w.deficiency;
      return static_cast<std::int64_t>(w.cover_a->length()) == detail::isize(in.a) + r &&
             static_cast<std::int64_t>(w.cover_b->length()) == detail::isize(*in.b) + r &&
             w.cover_a->difference() == *w.difference && w.cover_b->difference() == *w.difference;
    }
    case TheoremId::vosper:
    case TheoremId::lemma2:
      return w.cover_a && w.cover_a->length() == in.a.size() &&
             (!in.difference || in.a.size() >= in.a.p() - 1 ||
              w.cover_a->difference() == in.a.modulus().canonical_difference(*in.difference));
    case TheoremId::theorem_con:
      return w.cover_a && w.deficiency &&
             static_cast<std::int64_t>(w.cover_a->length()) <= detail::isize(in.a) + *w.deficiency;
    default:
      return true;
  }
}

}  // namespace zp
