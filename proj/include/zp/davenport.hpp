#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zp/error.hpp"
#include "zp/residue_set.hpp"
#include "zp/setops.hpp"
#include "zp/verdict.hpp"

namespace zp {

/// Standing data for the Davenport transform of (A, B): requires 0 in B,
/// |B| >= 2 and A + B != Z/pZ. S = A+B, C = -(complement of S),
/// E = (A+2B) minus S.
class TransformContext {
 public:
  static TransformContext build(const ResidueSet& a, const ResidueSet& b) {
    a.check_same(b);
    if (a.is_empty()) throw Error(Errc::empty_set, "A must be nonempty");
    if (!b.contains(0)) throw Error(Errc::zero_not_in_b, "0 must belong to B; see normalize_zero_in_b");
    if (b.size() < 2) throw Error(Errc::b_too_small, "|B| must be at least 2");
    ResidueSet s = sumset(a, b);
    if (s.is_full()) throw Error(Errc::sumset_full, "A+B is all of Z/pZ");
    ResidueSet a2b = sumset(s, b);
    ResidueSet c = negated(complement(s));
    ResidueSet e = a2b - s;
    return TransformContext(a, b, std::move(s), std::move(a2b), std::move(c), std::move(e));
  }

  const ResidueSet& a() const noexcept { return a_; }
  const ResidueSet& b() const noexcept { return b_; }
  const ResidueSet& sum() const noexcept { return sum_; }
  /// A + 2B
  const ResidueSet& sum_plus_b() const noexcept { return sum_plus_b_; }
  const ResidueSet& companion() const noexcept { return companion_; }
  const ResidueSet& excess() const noexcept { return excess_; }

  std::int64_t deficiency() const noexcept {
    return static_cast<std::int64_t>(sum_.size()) - static_cast<std::int64_t>(a_.size()) -
           static_cast<std::int64_t>(b_.size()) + 1;
  }

  Instance instance() const { return Instance{a_, b_, std::nullopt}; }

 private:
  TransformContext(ResidueSet a, ResidueSet b, ResidueSet s, ResidueSet a2b, ResidueSet c, ResidueSet e)
      : a_(std::move(a)), b_(std::move(b)), sum_(std::move(s)), sum_plus_b_(std::move(a2b)),
        companion_(std::move(c)), excess_(std::move(e)) {}

  ResidueSet a_, b_, sum_, sum_plus_b_, companion_, excess_;
};

/// Returns B - b, which contains 0. Every transform check is invariant under
/// this translation since |A + (B - b)| = |A + B|.
inline ResidueSet normalize_zero_in_b(const ResidueSet& b, Residue member) {
  if (!b.contains(member)) throw Error(Errc::bad_parameter, std::to_string(member) + " is not a member of B");
  return translated(b, b.modulus().neg(member));
}

inline ResidueSet normalize_zero_in_b(const ResidueSet& b) { return normalize_zero_in_b(b, b.min()); }

/// lower = B_e = B cap (e + C); upper = B^e = B cap (e + complement(C)).
struct DavenportSplit {
  Residue e;
  ResidueSet lower;
  ResidueSet upper;
};

inline DavenportSplit split(const TransformContext& ctx, Residue e) {
  if (!ctx.excess().contains(e))
    throw Error(Errc::not_in_excess_set, std::to_string(e) + " is not in E=" + ctx.excess().to_string());
  ResidueSet shifted_c = translated(ctx.companion(), e);
  ResidueSet lower = ctx.b() & shifted_c;
  ResidueSet upper = ctx.b() - shifted_c;
  return {e, std::move(lower), std::move(upper)};
}

inline std::vector<DavenportSplit> all_splits(const TransformContext& ctx) {
  std::vector<DavenportSplit> out;
  ctx.excess().for_each([&](Residue e) { out.push_back(split(ctx, e)); });
  return out;
}

namespace detail {

inline TheoremVerdict transform_verdict(const TransformContext& ctx, bool ok, std::string what, Residue e) {
  TheoremVerdict v{TheoremId::davenport, ctx.instance(), ok, {}};
  v.witness.detail = std::move(what) + " e=" + std::to_string(e);
  return v;
}

}  // namespace detail

/// E nonempty and A+2B = S disjoint-union E.
inline TheoremVerdict check_excess(const TransformContext& ctx) {
  bool ok = !ctx.excess().is_empty() && !ctx.excess().intersects(ctx.sum()) &&
            (ctx.sum() | ctx.excess()) == ctx.sum_plus_b();
  TheoremVerdict v{TheoremId::davenport, ctx.instance(), ok, {}};
  v.witness.detail = "excess";
  return v;
}

/// Partition of B, 0 in B_e, and 1 <= |B_e| <= |B| - 1.
inline TheoremVerdict check_partition(const TransformContext& ctx, const DavenportSplit& s) {
  const std::size_t lo = s.lower.size();
  bool ok = (s.lower | s.upper) == ctx.b() && !s.lower.intersects(s.upper) && s.lower.contains(0) &&
            !s.upper.is_empty() && lo >= 1 && lo + 1 <= ctx.b().size();
  return detail::transform_verdict(ctx, ok, "partition", s.e);
}

/// A + B_e and e - B^e both lie in A + B, and are disjoint.
inline TheoremVerdict check_containment(const TransformContext& ctx, const DavenportSplit& s) {
  ResidueSet left = sumset(ctx.a(), s.lower);
  ResidueSet right = translated(negated(s.upper), s.e);
  bool ok = left.is_subset_of(ctx.sum()) && right.is_subset_of(ctx.sum()) && !left.intersects(right);
  return detail::transform_verdict(ctx, ok, "containment", s.e);
}

/// |A+B| - |B| >= |A+B_e| - |B_e|.
inline TheoremVerdict check_descent(const TransformContext& ctx, const DavenportSplit& s) {
  if (s.lower.is_empty()) return gate_not_met(TheoremId::davenport, ctx.instance(), "descent: B_e empty");
  const std::int64_t lhs = static_cast<std::int64_t>(ctx.sum().size()) - static_cast<std::int64_t>(ctx.b().size());
  const std::int64_t rhs =
      static_cast<std::int64_t>(sumset(ctx.a(), s.lower).size()) - static_cast<std::int64_t>(s.lower.size());
  return detail::transform_verdict(ctx, lhs >= rhs, "descent", s.e);
}

/// If every B_e is {0}: |B| <= r+2 when A+2B != Z/pZ, else |C| <= r+1.
inline TheoremVerdict lemma1_check(const TransformContext& ctx) {
  bool all_trivial = true;
  ctx.excess().for_each([&](Residue e) {
    if (all_trivial && split(ctx, e).lower.size() != 1) all_trivial = false;
  });
  if (!all_trivial) return gate_not_met(TheoremId::lemma1, ctx.instance(), "some |B_e| >= 2");
  const std::int64_t r = ctx.deficiency();
  bool ok;
  std::string detail;
  if (!ctx.sum_plus_b().is_full()) {
    ok = static_cast<std::int64_t>(ctx.b().size()) <= r + 2;
    detail = "A+2B proper: |B|=" + std::to_string(ctx.b().size()) + " r=" + std::to_string(r);
  } else {
    ok = static_cast<std::int64_t>(ctx.companion().size()) <= r + 1;
    detail = "A+2B full: |C|=" + std::to_string(ctx.companion().size()) + " r=" + std::to_string(r);
  }
  TheoremVerdict v{TheoremId::lemma1, ctx.instance(), ok, {}};
  v.witness.deficiency = r;
  v.witness.detail = std::move(detail);
  return v;
}

/// Every transform property over every e in E; the first violation found is
/// returned, otherwise a holding verdict.
inline TheoremVerdict transform_suite(const TransformContext& ctx) {
  TheoremVerdict ex = check_excess(ctx);
  if (ex.is_counterexample()) return ex;
  std::optional<TheoremVerdict> failure;
  ctx.excess().for_each([&](Residue e) {
    if (failure) return;
    DavenportSplit s = split(ctx, e);
    for (auto v : {check_partition(ctx, s), check_containment(ctx, s), check_descent(ctx, s)})
      if (v.is_counterexample()) {
        failure = std::move(v);
        return;
      }
  });
  if (failure) return *failure;
  TheoremVerdict l1 = lemma1_check(ctx);
  if (l1.is_counterexample()) {
    l1.theorem = TheoremId::davenport;
    l1.witness.detail = "lemma1: " + l1.witness.detail;
    return l1;
  }
  TheoremVerdict v{TheoremId::davenport, ctx.instance(), true, {}};
  v.witness.deficiency = ctx.deficiency();
  v.witness.detail = "|E|=" + std::to_string(ctx.excess().size());
  return v;
}

}  // namespace zp
