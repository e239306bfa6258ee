#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zp/error.hpp"
#include "zp/modulus.hpp"
#include "zp/progression.hpp"
#include "zp/residue_set.hpp"

namespace zp {

namespace detail {

inline void require_nonempty(const ResidueSet& a, const char* what) {
  if (a.is_empty()) throw Error(Errc::empty_set, std::string(what) + " requires a nonempty set");
}

inline std::uint64_t rotate_word(std::uint64_t x, unsigned k, unsigned p, std::uint64_t mask) {
  return ((x << k) | (x >> (p - k))) & mask;
}

using u128 = unsigned __int128;

inline u128 rotate_dword(u128 x, unsigned k, unsigned p, u128 mask) {
  return ((x << k) | (x >> (p - k))) & mask;
}

inline u128 load_dword(std::span<const std::uint64_t> w) {
  return static_cast<u128>(w[0]) | (static_cast<u128>(w[1]) << 64);
}

inline void store_dword(std::span<std::uint64_t> w, u128 v) {
  w[0] = static_cast<std::uint64_t>(v);
  w[1] = static_cast<std::uint64_t>(v >> 64);
}

/// dst |= src << k, truncated to dst's words.
inline void or_shift_left(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, unsigned k) {
  const std::size_t n = dst.size();
  const std::size_t ws = k / 64;
  const unsigned bs = k % 64;
  for (std::size_t i = n; i-- > ws;) {
    std::uint64_t v = src[i - ws] << bs;
    if (bs && i - ws >= 1) v |= src[i - ws - 1] >> (64 - bs);
    dst[i] |= v;
  }
}

/// dst |= src >> k.
inline void or_shift_right(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, unsigned k) {
  const std::size_t n = dst.size();
  const std::size_t ws = k / 64;
  const unsigned bs = k % 64;
  for (std::size_t i = 0; i + ws < n; ++i) {
    std::uint64_t v = src[i + ws] >> bs;
    if (bs && i + ws + 1 < n) v |= src[i + ws + 1] << (64 - bs);
    dst[i] |= v;
  }
}

/// dst |= src rotated by k inside the p-bit ring.
inline void or_rotated(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, unsigned k, unsigned p) {
  or_shift_left(dst, src, k);
  if (k != 0) or_shift_right(dst, src, p - k);
  dst.back() &= top_mask(p);
}

}  // namespace detail

/// {(a + b) mod p}. Word-parallel: A is rotated once per member of the
/// smaller operand and OR-accumulated.
inline ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
  a.check_same(b);
  detail::require_nonempty(a, "sumset");
  detail::require_nonempty(b, "sumset");
  const ResidueSet& rot = a.size() >= b.size() ? a : b;
  const ResidueSet& by = a.size() >= b.size() ? b : a;
  const unsigned p = a.p();
  ResidueSet out(a.modulus());
  if (p < 64) {
    const std::uint64_t mask = detail::top_mask(p);
    const std::uint64_t x = rot.words()[0];
    std::uint64_t bits = by.words()[0];
    std::uint64_t acc = 0;
    while (bits) {
      acc |= detail::rotate_word(x, static_cast<unsigned>(std::countr_zero(bits)), p, mask);
      bits &= bits - 1;
    }
    out.mutable_words()[0] = acc;
  } else if (p < 128) {
    const detail::u128 mask = (detail::u128{1} << p) - 1;
    const detail::u128 x = detail::load_dword(rot.words());
    detail::u128 acc = 0;
    by.for_each([&](Residue k) { acc |= detail::rotate_dword(x, k, p, mask); });
    detail::store_dword(out.mutable_words(), acc);
  } else {
    auto dst = out.mutable_words();
    auto src = rot.words();
    by.for_each([&](Residue k) { detail::or_rotated(dst, src, k, p); });
  }
  return out;
}

/// 2A = A + A.
inline ResidueSet doubled(const ResidueSet& a) {
  detail::require_nonempty(a, "doubled");
  return sumset(a, a);
}

/// {a + a' : a, a' in A, a != a'}.
inline ResidueSet restricted_sumset(const ResidueSet& a) {
  if (a.size() < 2) throw Error(Errc::too_few_members, "restricted sumset needs |A| >= 2");
  const unsigned p = a.p();
  ResidueSet out(a.modulus());
  ResidueSet above = a;
  a.for_each([&](Residue x) {
    above.erase(x);  // members strictly greater than x remain
    if (!above.is_empty()) detail::or_rotated(out.mutable_words(), above.words(), x, p);
  });
  return out;
}

inline ResidueSet complement(const ResidueSet& a) {
  ResidueSet out = a;
  auto w = out.mutable_words();
  for (auto& x : w) x = ~x;
  w.back() &= detail::top_mask(a.p());
  return out;
}

inline ResidueSet affine_image(const ResidueSet& a, const AffineMap& m) {
  if (!(a.modulus() == m.modulus())) throw Error(Errc::modulus_mismatch, "affine map modulus differs from set");
  detail::require_nonempty(a, "affine_image");
  ResidueSet out(a.modulus());
  a.for_each([&](Residue x) { out.insert(m(x)); });
  return out;
}

/// -A. Tolerates the empty set.
inline ResidueSet negated(const ResidueSet& a) {
  ResidueSet out(a.modulus());
  const PrimeModulus m = a.modulus();
  a.for_each([&](Residue x) { out.insert(m.neg(x)); });
  return out;
}

/// A + t. Tolerates the empty set.
inline ResidueSet translated(const ResidueSet& a, Residue t) {
  ResidueSet out(a.modulus());
  if (a.is_empty()) return out;
  detail::or_rotated(out.mutable_words(), a.words(), t % a.p(), a.p());
  return out;
}

/// C = -(complement of A+B). Empty exactly when A+B covers Z/pZ.
inline ResidueSet companion_set(const ResidueSet& a, const ResidueSet& b) {
  return negated(complement(sumset(a, b)));
}

/// r(A,B) = |A+B| - |A| - |B| + 1.
inline std::int64_t deficiency(const ResidueSet& a, const ResidueSet& b) {
  return static_cast<std::int64_t>(sumset(a, b).size()) - static_cast<std::int64_t>(a.size()) -
         static_cast<std::int64_t>(b.size()) + 1;
}

// ---------------------------------------------------------------------------
// Covering progressions.
//
// For a fixed difference d, list the residues in the order 0, d, 2d, ...,
// (p-1)d. The shortest progression with difference d that covers A spans the
// complement of the largest cyclic gap between consecutive members in that
// order, so its length is p - maxgap + 1.

struct CoverScan {
  std::uint32_t length;
  Residue start;  // first term, walking in direction +d
};

namespace detail {

inline CoverScan cover_by_walk(const ResidueSet& a, Residue d) {
  const PrimeModulus m = a.modulus();
  const std::uint32_t p = m.value();
  std::int64_t first = -1, last = -1;
  std::uint32_t best_gap = 0;
  Residue best_start = 0;
  auto consider = [&](std::uint32_t gap, Residue start) {
    if (gap > best_gap || (gap == best_gap && start < best_start)) {
      best_gap = gap;
      best_start = start;
    }
  };
  Residue first_res = 0;
  Residue x = 0;
  if (p < 64) {
    const std::uint64_t w = a.words()[0];
    for (std::uint32_t j = 0; j < p; ++j, x = m.add(x, d)) {
      if (!((w >> x) & 1u)) continue;
      if (first < 0) {
        first = j;
        first_res = x;
      } else {
        consider(static_cast<std::uint32_t>(j - last), x);
      }
      last = j;
    }
  } else {
    for (std::uint32_t j = 0; j < p; ++j, x = m.add(x, d)) {
      if (!a.contains(x)) continue;
      if (first < 0) {
        first = j;
        first_res = x;
      } else {
        consider(static_cast<std::uint32_t>(j - last), x);
      }
      last = j;
    }
  }
  consider(static_cast<std::uint32_t>(p - last + first), first_res);
  return {p - best_gap + 1, best_start};
}

/// Same answer as cover_by_walk, via dilation by d^-1 and a sort. Cheaper
/// when |A| is much smaller than p.
inline CoverScan cover_by_dilation(const ResidueSet& a, Residue d) {
  const PrimeModulus m = a.modulus();
  const std::uint32_t p = m.value();
  const Residue dinv = m.inverse(d);
  std::vector<Residue> pos;
  pos.reserve(a.size());
  a.for_each([&](Residue x) { pos.push_back(m.mul(x, dinv)); });
  std::sort(pos.begin(), pos.end());
  std::uint32_t best_gap = 0;
  Residue best_start = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    std::uint32_t gap = i == 0 ? p - pos.back() + pos.front() : pos[i] - pos[i - 1];
    Residue start = m.mul(pos[i], d);
    if (gap > best_gap || (gap == best_gap && start < best_start)) {
      best_gap = gap;
      best_start = start;
    }
  }
  return {p - best_gap + 1, best_start};
}

}  // namespace detail

/// Shortest progression with difference d (or -d) covering A; the start is
/// reported for the canonical direction of d.
inline CoverScan cover_along(const ResidueSet& a, Residue d) {
  detail::require_nonempty(a, "cover_along");
  const PrimeModulus m = a.modulus();
  d %= m.value();
  if (d == 0) throw Error(Errc::zero_difference, "cover difference must be nonzero");
  d = m.canonical_difference(d);
  if (a.p() >= 128 && a.size() * 16 < a.p()) return detail::cover_by_dilation(a, d);
  return detail::cover_by_walk(a, d);
}

inline std::uint32_t cover_length(const ResidueSet& a, Residue d) { return cover_along(a, d).length; }

/// Canonical descriptor of the shortest cover of A with difference +-d.
inline ApDescriptor cover_with_difference(const ResidueSet& a, Residue d) {
  const PrimeModulus m = a.modulus();
  CoverScan c = cover_along(a, d);
  return ApDescriptor::make(m, c.start, m.canonical_difference(d % m.value()), c.length);
}

/// Length of the shortest arithmetic progression covering A.
inline std::uint32_t diameter(const ResidueSet& a) {
  detail::require_nonempty(a, "diameter");
  const std::uint32_t k = static_cast<std::uint32_t>(a.size());
  if (k == 1) return 1;
  if (k == a.p()) return k;
  std::uint32_t best = a.p();
  for (Residue d = 1; d <= a.modulus().max_canonical_difference() && best > k; ++d)
    best = std::min(best, cover_length(a, d));
  return best;
}

/// The argmin companion of diameter(): smallest canonical difference among
/// the shortest covers, then smallest start.
inline ApDescriptor min_cover_ap(const ResidueSet& a) {
  detail::require_nonempty(a, "min_cover_ap");
  const PrimeModulus m = a.modulus();
  const std::uint32_t k = static_cast<std::uint32_t>(a.size());
  if (k == 1) return ApDescriptor::make(m, a.min(), 1, 1);
  if (k == a.p()) return ApDescriptor::make(m, 0, 1, k);
  CoverScan best{a.p() + 1, 0};
  Residue best_d = 1;
  for (Residue d = 1; d <= m.max_canonical_difference() && best.length > k; ++d) {
    CoverScan c = cover_along(a, d);
    if (c.length < best.length) {
      best = c;
      best_d = d;
    }
  }
  return ApDescriptor::make(m, best.start, best_d, best.length);
}

/// Present iff A is itself an arithmetic progression.
inline std::optional<ApDescriptor> is_ap(const ResidueSet& a) {
  ApDescriptor c = min_cover_ap(a);
  if (c.length() == a.size()) return c;
  return std::nullopt;
}

/// diam(A) <= |2A| - |A| + 1.
inline bool is_short_covered(const ResidueSet& a) {
  detail::require_nonempty(a, "is_short_covered");
  const std::int64_t bound =
      static_cast<std::int64_t>(doubled(a).size()) - static_cast<std::int64_t>(a.size()) + 1;
  return static_cast<std::int64_t>(diameter(a)) <= bound;
}

}  // namespace zp
