#pragma once

#include <cstdint>
#include <string>

#include "zp/error.hpp"
#include "zp/modulus.hpp"
#include "zp/residue_set.hpp"

namespace zp {

/// a -> scale * a + shift, scale nonzero.
class AffineMap {
 public:
  AffineMap(PrimeModulus m, Residue scale, Residue shift) : mod_(m), scale_(scale % m.value()), shift_(shift % m.value()) {
    if (scale_ == 0) throw Error(Errc::zero_difference, "affine scale must be nonzero");
  }

  static AffineMap translation(PrimeModulus m, Residue shift) { return {m, 1, shift}; }
  static AffineMap dilation(PrimeModulus m, Residue scale) { return {m, scale, 0}; }

  PrimeModulus modulus() const noexcept { return mod_; }
  Residue scale() const noexcept { return scale_; }
  Residue shift() const noexcept { return shift_; }

  Residue operator()(Residue a) const noexcept { return mod_.add(mod_.mul(scale_, a), shift_); }

  /// x^-1 (a - y)
  AffineMap inverse() const {
    Residue xi = mod_.inverse(scale_);
    return {mod_, xi, mod_.neg(mod_.mul(xi, shift_))};
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  PrimeModulus mod_;
  Residue scale_;
  Residue shift_;
};

/// An arithmetic progression {start + j*difference : 0 <= j < length} in
/// canonical form: difference in [1, (p-1)/2], difference 1 for length 1,
/// and (start 0, difference 1) for the full group.
class ApDescriptor {
 public:
  static ApDescriptor make(PrimeModulus m, Residue start, Residue difference, std::uint32_t length) {
    const std::uint32_t p = m.value();
    if (length == 0 || length > p)
      throw Error(Errc::out_of_range, "progression length " + std::to_string(length) + " outside [1, p]");
    start %= p;
    difference %= p;
    if (length == 1) return ApDescriptor(m, start, 1, 1);
    if (difference == 0) throw Error(Errc::zero_difference, "progression of length > 1 needs d != 0");
    if (length == p) return ApDescriptor(m, 0, 1, p);
    if (difference > m.max_canonical_difference()) {
      // Walk the same set backwards from its last element.
      Residue last = m.add(start, m.mul(difference, length - 1));
      return ApDescriptor(m, last, p - difference, length);
    }
    return ApDescriptor(m, start, difference, length);
  }

  PrimeModulus modulus() const noexcept { return mod_; }
  Residue start() const noexcept { return start_; }
  Residue difference() const noexcept { return difference_; }
  std::uint32_t length() const noexcept { return length_; }

  Residue element(std::uint32_t j) const noexcept { return mod_.add(start_, mod_.mul(difference_, j % mod_.value())); }

  ResidueSet expand() const {
    ResidueSet s(mod_);
    Residue x = start_;
    for (std::uint32_t j = 0; j < length_; ++j) {
      s.insert(x);
      x = mod_.add(x, difference_);
    }
    return s;
  }

  bool covers(const ResidueSet& a) const { return a.is_subset_of(expand()); }

  /// Same start and difference, more terms on the right end.
  ApDescriptor extended_to(std::uint32_t new_length) const {
    if (new_length < length_) throw Error(Errc::bad_parameter, "cannot shrink a progression");
    return make(mod_, start_, difference_, new_length);
  }

  std::string to_string() const {
    return "p=" + std::to_string(mod_.value()) + ":ap(start=" + std::to_string(start_) +
           ",d=" + std::to_string(difference_) + ",k=" + std::to_string(length_) + ")";
  }

  friend bool operator==(const ApDescriptor&, const ApDescriptor&) = default;

 private:
  ApDescriptor(PrimeModulus m, Residue start, Residue difference, std::uint32_t length)
      : mod_(m), start_(start), difference_(difference), length_(length) {}

  PrimeModulus mod_;
  Residue start_;
  Residue difference_;
  std::uint32_t length_;
};

}  // namespace zp
