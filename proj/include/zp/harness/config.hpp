#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "zp/error.hpp"
#include "zp/modulus.hpp"
#include "zp/theorems.hpp"
#include "zp/verdict.hpp"

namespace zp::harness {

enum class Mode { exhaustive, sample };

constexpr std::string_view to_string(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "sample"; }

/// Inclusive cardinality bounds on |A| and |B|; unset means unbounded.
struct SizeFilter {
  std::optional<std::uint32_t> min_a, max_a, min_b, max_b;

  bool empty() const { return !min_a && !max_a && !min_b && !max_b; }
  bool accepts_a(std::size_t k) const { return (!min_a || k >= *min_a) && (!max_a || k <= *max_a); }
  bool accepts_b(std::size_t k) const { return (!min_b || k >= *min_b) && (!max_b || k <= *max_b); }
};

/// Shape of the instance space a theorem is enumerated over.
enum class InstanceKind {
  single,               // nonempty A
  single_at_least_two,  // |A| >= 2
  set_with_difference,  // |A| >= 2, d in [1, p-1]
  pair,                 // nonempty ordered (A, B)
  admissible_pair,      // 0 in B, |B| >= 2, A + B != Z/pZ
};

constexpr InstanceKind kind_of(TheoremId id) {
  switch (id) {
    case TheoremId::freiman_3k3:
    case TheoremId::freiman_24: return InstanceKind::single;
    case TheoremId::erdos_heilbronn: return InstanceKind::single_at_least_two;
    case TheoremId::lemma2: return InstanceKind::set_with_difference;
    case TheoremId::davenport:
    case TheoremId::lemma1: return InstanceKind::admissible_pair;
    default: return InstanceKind::pair;
  }
}

inline constexpr std::uint64_t kMaxExhaustiveSpace = std::uint64_t{1} << 28;
inline constexpr std::uint32_t kPartitions = 64;

/// Closed-form size of the raw enumeration domain, saturating at 2^63.
inline std::uint64_t space_size(InstanceKind kind, std::uint32_t p) {
  constexpr std::uint64_t kSat = std::uint64_t{1} << 63;
  if (p >= 62) return kSat;
  const std::uint64_t sets = (std::uint64_t{1} << p) - 1;
  auto mul = [&](std::uint64_t x, std::uint64_t y) { return (y != 0 && x > kSat / y) ? kSat : x * y; };
  switch (kind) {
    case InstanceKind::single: return sets;
    case InstanceKind::single_at_least_two: return sets - p;
    case InstanceKind::set_with_difference: return mul(sets - p, p - 1);
    case InstanceKind::pair: return mul(sets, sets);
    case InstanceKind::admissible_pair: return mul(sets, std::uint64_t{1} << (p - 1));
  }
  return kSat;
}

struct RunConfig {
  TheoremId theorem;
  PrimeModulus p;
  Mode mode = Mode::exhaustive;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  SizeFilter filters{};
  std::size_t max_counterexamples = 100;
  Freiman24Params freiman{};

  void validate() const {
    if (workers == 0) throw Error(Errc::bad_parameter, "workers must be at least 1");
    if (theorem == TheoremId::freiman_24) freiman.validate();
    if (mode == Mode::exhaustive) {
      const std::uint64_t n = space_size(kind_of(theorem), p.value());
      if (n > kMaxExhaustiveSpace)
        throw Error(Errc::space_too_large, "exhaustive space " + std::to_string(n) + " exceeds 2^28 at p=" +
                                               std::to_string(p.value()) + "; use sampling");
    } else if (sample_count == 0) {
      throw Error(Errc::bad_parameter, "sample mode needs a positive sample count");
    }
  }
};

}  // namespace zp::harness
