#pragma once

#include <cstdint>
#include <string>

#include "zp/error.hpp"

namespace zp {

using Residue = std::uint32_t;

/// A prime p, validated once at construction. Arithmetic helpers assume
/// their arguments are already reduced to [0, p).
class PrimeModulus {
 public:
  static constexpr std::uint32_t kMax = 1u << 24;

  explicit PrimeModulus(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    if (p > kMax) throw Error(Errc::out_of_range, "modulus above " + std::to_string(kMax));
  }

  static constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
      if (n % q == 0) return false;
    return true;
  }

  std::uint32_t value() const noexcept { return p_; }

  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(m < 0 ? m + p_ : m);
  }

  /// Extended Euclid. a must be nonzero mod p.
  Residue inverse(Residue a) const {
    if (a % p_ == 0) throw Error(Errc::zero_difference, "0 has no inverse");
    std::int64_t r0 = p_, r1 = a % p_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t t2 = t0 - q * t1;
      t0 = t1;
      t1 = t2;
    }
    return reduce(t0);
  }

  /// Largest canonical difference: differences d and p-d name the same
  /// progression family, so only [1, (p-1)/2] is scanned (d = 1 when p = 2).
  Residue max_canonical_difference() const noexcept { return p_ == 2 ? 1 : (p_ - 1) / 2; }

  Residue canonical_difference(Residue d) const noexcept {
    return d > max_canonical_difference() ? p_ - d : d;
  }

  friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace zp
