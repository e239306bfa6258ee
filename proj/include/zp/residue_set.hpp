#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zp/error.hpp"
#include "zp/modulus.hpp"

namespace zp {

namespace detail {

/// Word storage with two inline words, so every set with p <= 127 lives
/// without a heap allocation.
class WordBuffer {
 public:
  static constexpr std::size_t kInline = 2;

  WordBuffer() = default;
  explicit WordBuffer(std::size_t n) : size_(n) {
    if (n > kInline) heap_.assign(n, 0);
  }

  std::size_t size() const noexcept { return size_; }
  std::uint64_t* data() noexcept { return size_ > kInline ? heap_.data() : inline_.data(); }
  const std::uint64_t* data() const noexcept {
    return size_ > kInline ? heap_.data() : inline_.data();
  }
  std::span<std::uint64_t> span() noexcept { return {data(), size_}; }
  std::span<const std::uint64_t> span() const noexcept { return {data(), size_}; }

 private:
  std::array<std::uint64_t, kInline> inline_{};
  std::vector<std::uint64_t> heap_;
  std::size_t size_ = 0;
};

constexpr std::size_t words_for(std::uint32_t p) { return (p + 63) / 64; }

constexpr std::uint64_t top_mask(std::uint32_t p) {
  unsigned rem = p % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace detail

/// A subset of Z/pZ stored as a bitmask over residues 0..p-1. Bits at or
/// beyond index p are always zero.
class ResidueSet {
 public:
  explicit ResidueSet(PrimeModulus m) : mod_(m), words_(detail::words_for(m.value())) {}

  static ResidueSet empty(PrimeModulus m) { return ResidueSet(m); }

  static ResidueSet full(PrimeModulus m) {
    ResidueSet s(m);
    auto w = s.words_.span();
    std::fill(w.begin(), w.end(), ~std::uint64_t{0});
    w.back() &= detail::top_mask(m.value());
    return s;
  }

  static ResidueSet singleton(PrimeModulus m, Residue r) {
    ResidueSet s(m);
    s.insert(r);
    return s;
  }

  /// Duplicates collapse; out-of-range members are rejected.
  static ResidueSet from_members(PrimeModulus m, std::span<const Residue> members) {
    ResidueSet s(m);
    for (Residue r : members) s.insert(r);
    return s;
  }
  static ResidueSet from_members(PrimeModulus m, std::initializer_list<Residue> members) {
    return from_members(m, std::span<const Residue>(members.begin(), members.size()));
  }

  /// Bit i of `mask` is residue i. Only the low p bits may be set.
  static ResidueSet from_mask(PrimeModulus m, std::uint64_t mask) {
    ResidueSet s(m);
    if (m.value() < 64 && (mask >> m.value()) != 0)
      throw Error(Errc::out_of_range, "mask has bits at or beyond p");
    s.words_.data()[0] = mask;
    return s;
  }

  PrimeModulus modulus() const noexcept { return mod_; }
  std::uint32_t p() const noexcept { return mod_.value(); }

  std::span<const std::uint64_t> words() const noexcept { return words_.span(); }
  std::span<std::uint64_t> mutable_words() noexcept { return words_.span(); }

  bool contains(Residue r) const noexcept {
    return r < p() && ((words_.data()[r / 64] >> (r % 64)) & 1u);
  }

  void insert(Residue r) {
    if (r >= p())
      throw Error(Errc::out_of_range,
                  std::to_string(r) + " is not a residue mod " + std::to_string(p()));
    words_.data()[r / 64] |= std::uint64_t{1} << (r % 64);
  }

  void erase(Residue r) noexcept {
    if (r < p()) words_.data()[r / 64] &= ~(std::uint64_t{1} << (r % 64));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_.span()) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_empty() const noexcept {
    for (auto w : words_.span())
      if (w) return false;
    return true;
  }

  bool is_full() const noexcept { return size() == p(); }

  /// Calls f(residue) for each member in ascending order.
  template <class F>
  void for_each(F&& f) const {
    auto w = words_.span();
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t bits = w[i];
      while (bits) {
        f(static_cast<Residue>(i * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Residue> members() const {
    std::vector<Residue> out;
    out.reserve(size());
    for_each([&](Residue r) { out.push_back(r); });
    return out;
  }

  /// Smallest member; the set must be nonempty.
  Residue min() const {
    auto w = words_.span();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) return static_cast<Residue>(i * 64 + std::countr_zero(w[i]));
    throw Error(Errc::empty_set, "min of empty set");
  }

  bool is_subset_of(const ResidueSet& other) const {
    check_same(other);
    auto a = words_.span();
    auto b = other.words_.span();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }

  bool intersects(const ResidueSet& other) const {
    check_same(other);
    auto a = words_.span();
    auto b = other.words_.span();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & b[i]) return true;
    return false;
  }

  ResidueSet& operator|=(const ResidueSet& o) { return combine(o, [](auto x, auto y) { return x | y; }); }
  ResidueSet& operator&=(const ResidueSet& o) { return combine(o, [](auto x, auto y) { return x & y; }); }
  /// Set difference.
  ResidueSet& operator-=(const ResidueSet& o) { return combine(o, [](auto x, auto y) { return x & ~y; }); }

  friend ResidueSet operator|(ResidueSet a, const ResidueSet& b) { return a |= b; }
  friend ResidueSet operator&(ResidueSet a, const ResidueSet& b) { return a &= b; }
  friend ResidueSet operator-(ResidueSet a, const ResidueSet& b) { return a -= b; }

  friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
    if (!(a.mod_ == b.mod_)) return false;
    auto x = a.words_.span();
    auto y = b.words_.span();
    return std::equal(x.begin(), x.end(), y.begin());
  }

  /// Literal form `p=13:{0,1,5}`.
  std::string to_string() const {
    std::string out = "p=" + std::to_string(p()) + ":{";
    bool first = true;
    for_each([&](Residue r) {
      if (!first) out += ',';
      out += std::to_string(r);
      first = false;
    });
    out += '}';
    return out;
  }

  /// Parses `p=<prime>:{a,b,...}`. Members must be strictly ascending, which
  /// rejects duplicates; no whitespace is accepted.
  static ResidueSet parse(std::string_view text) {
    auto fail = [&](const std::string& why) {
      return Error(Errc::parse_error, "'" + std::string(text) + "': " + why);
    };
    if (text.substr(0, 2) != "p=") throw fail("expected 'p=' prefix");
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw fail("expected ':'");
    std::uint32_t p = parse_uint(text.substr(2, colon - 2), text);
    PrimeModulus m(p);
    std::string_view body = text.substr(colon + 1);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') throw fail("expected braces");
    body = body.substr(1, body.size() - 2);
    ResidueSet s(m);
    if (body.empty()) return s;
    std::int64_t prev = -1;
    for (std::string_view item : split_csv(body)) {
      std::uint32_t r = parse_uint(item, text);
      if (r >= p) throw Error(Errc::out_of_range, std::to_string(r) + " >= p in '" + std::string(text) + "'");
      if (static_cast<std::int64_t>(r) == prev || s.contains(r))
        throw Error(Errc::duplicate_member, std::to_string(r) + " repeated in '" + std::string(text) + "'");
      if (static_cast<std::int64_t>(r) < prev) throw fail("members must be ascending");
      s.insert(r);
      prev = r;
    }
    return s;
  }

  /// Parses a bare member list `0,1,5` against a known modulus. Order is
  /// free, duplicates and out-of-range members are rejected.
  static ResidueSet parse_csv(PrimeModulus m, std::string_view csv) {
    ResidueSet s(m);
    if (csv.empty()) return s;
    for (std::string_view item : split_csv(csv)) {
      std::uint32_t r = parse_uint(item, csv);
      if (r >= m.value())
        throw Error(Errc::out_of_range, std::to_string(r) + " is not a residue mod " + std::to_string(m.value()));
      if (s.contains(r)) throw Error(Errc::duplicate_member, std::to_string(r) + " repeated");
      s.insert(r);
    }
    return s;
  }

  void check_same(const ResidueSet& other) const {
    if (!(mod_ == other.mod_))
      throw Error(Errc::modulus_mismatch,
                  "p=" + std::to_string(p()) + " vs p=" + std::to_string(other.p()));
  }

 private:
  template <class Op>
  ResidueSet& combine(const ResidueSet& o, Op op) {
    check_same(o);
    auto a = words_.span();
    auto b = o.words_.span();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = op(a[i], b[i]);
    return *this;
  }

  static std::vector<std::string_view> split_csv(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      out.push_back(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

  static std::uint32_t parse_uint(std::string_view s, std::string_view context) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(Errc::parse_error, "bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
  }

  PrimeModulus mod_;
  detail::WordBuffer words_;
};

}  // namespace zp
