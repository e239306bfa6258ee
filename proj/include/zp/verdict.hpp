#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "zp/progression.hpp"
#include "zp/residue_set.hpp"

namespace zp {

/// Stable identifiers; these strings are CLI values and report keys.
enum class TheoremId {
  cauchy_davenport,
  lemma2,
  vosper,
  hsz_standard,
  hsz_conjecture,
  theorem_con,
  freiman_3k3,
  freiman_24,
  erdos_heilbronn,
  symmetry,
  davenport,
  lemma1,
};

inline constexpr std::array<TheoremId, 12> kAllTheorems = {
    TheoremId::cauchy_davenport, TheoremId::lemma2,      TheoremId::vosper,
    TheoremId::hsz_standard,     TheoremId::hsz_conjecture, TheoremId::theorem_con,
    TheoremId::freiman_3k3,      TheoremId::freiman_24,  TheoremId::erdos_heilbronn,
    TheoremId::symmetry,         TheoremId::davenport,   TheoremId::lemma1,
};

constexpr std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::cauchy_davenport: return "cauchy_davenport";
    case TheoremId::lemma2: return "lemma2";
    case TheoremId::vosper: return "vosper";
    case TheoremId::hsz_standard: return "hsz_standard";
    case TheoremId::hsz_conjecture: return "hsz_conjecture";
    case TheoremId::theorem_con: return "theorem_con";
    case TheoremId::freiman_3k3: return "freiman_3k3";
    case TheoremId::freiman_24: return "freiman_24";
    case TheoremId::erdos_heilbronn: return "erdos_heilbronn";
    case TheoremId::symmetry: return "symmetry";
    case TheoremId::davenport: return "davenport";
    case TheoremId::lemma1: return "lemma1";
  }
  return "unknown";
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view s) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

/// The sets (and difference, for the two-point lemma) a checker was run on.
struct Instance {
  ResidueSet a;
  std::optional<ResidueSet> b;
  std::optional<Residue> difference;

  std::string to_string() const {
    std::string out = "A=" + a.to_string();
    if (b) out += ";B=" + b->to_string();
    if (difference) out += ";d=" + std::to_string(*difference);
    return out;
  }
};

/// Data that lets a positive verdict be re-checked without the checker.
struct Witness {
  std::optional<Residue> difference;
  std::optional<ApDescriptor> cover_a;
  std::optional<ApDescriptor> cover_b;
  std::optional<std::int64_t> deficiency;
  std::string detail;
};

/// Outcome of one checker on one instance. `conclusion` is engaged exactly
/// when the hypotheses were met.
struct TheoremVerdict {
  TheoremId theorem;
  Instance instance;
  std::optional<bool> conclusion;
  Witness witness;

  bool hypotheses_met() const noexcept { return conclusion.has_value(); }
  bool holds() const noexcept { return !conclusion.has_value() || *conclusion; }
  bool is_counterexample() const noexcept { return conclusion.has_value() && !*conclusion; }

  std::string to_string() const {
    std::string out(zp::to_string(theorem));
    out += ' ';
    out += instance.to_string();
    out += hypotheses_met() ? (*conclusion ? " holds" : " FAILS") : " hypotheses-not-met";
    if (!witness.detail.empty()) out += " [" + witness.detail + "]";
    return out;
  }
};

inline TheoremVerdict gate_not_met(TheoremId id, Instance inst, std::string detail = {}) {
  TheoremVerdict v{id, std::move(inst), std::nullopt, {}};
  v.witness.detail = std::move(detail);
  return v;
}

}  // namespace zp
