#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zp {

enum class Errc {
  not_prime,
  modulus_mismatch,
  empty_set,
  out_of_range,
  duplicate_member,
  parse_error,
  too_few_members,
  zero_difference,
  bad_parameter,
  not_in_excess_set,
  zero_not_in_b,
  b_too_small,
  sumset_full,
  space_too_large,
  unknown_theorem,
  unknown_criterion,
};

constexpr std::string_view to_string(Errc c) {
  switch (c) {
    case Errc::not_prime: return "not_prime";
    case Errc::modulus_mismatch: return "modulus_mismatch";
    case Errc::empty_set: return "empty_set";
    case Errc::out_of_range: return "out_of_range";
    case Errc::duplicate_member: return "duplicate_member";
    case Errc::parse_error: return "parse_error";
    case Errc::too_few_members: return "too_few_members";
    case Errc::zero_difference: return "zero_difference";
    case Errc::bad_parameter: return "bad_parameter";
    case Errc::not_in_excess_set: return "not_in_excess_set";
    case Errc::zero_not_in_b: return "zero_not_in_b";
    case Errc::b_too_small: return "b_too_small";
    case Errc::sumset_full: return "sumset_full";
    case Errc::space_too_large: return "space_too_large";
    case Errc::unknown_theorem: return "unknown_theorem";
    case Errc::unknown_criterion: return "unknown_criterion";
  }
  return "unknown";
}

/// Raised for malformed input only. False theorem conclusions are reported
/// through verdicts, never through exceptions.
class Error : public std::invalid_argument {
 public:
  Error(Errc code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zp
