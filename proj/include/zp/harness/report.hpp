#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zp/harness/config.hpp"

namespace zp::harness {

inline constexpr const char* kSchemaVersion = "zp-sumsets/1";

/// One statically assigned slice of the instance space. The partition layout
/// depends only on the config, never on the worker count.
struct PartitionSummary {
  std::uint32_t index = 0;
  std::uint64_t begin = 0;  // first A encoding (exhaustive) or sample ordinal
  std::uint64_t end = 0;    // one past the last
  std::uint64_t instances = 0;
  std::uint64_t checksum = 0;
};

struct VerificationReport {
  explicit VerificationReport(RunConfig cfg) : config(std::move(cfg)) {}

  RunConfig config;
  std::uint64_t space_size = 0;
  std::uint64_t instances_tested = 0;
  std::uint64_t instances_skipped = 0;
  std::uint64_t hypothesis_met_count = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> conclusion_failures;  // capped at config.max_counterexamples
  std::vector<PartitionSummary> partitions;
  double elapsed_ms = 0;

  bool passed() const noexcept { return failure_count == 0; }

  /// Deterministic for a fixed config: worker count and timing are left out
  /// unless `include_timing` is set.
  nlohmann::json to_json(bool include_timing = false) const {
    nlohmann::json cfg = {
        {"theorem", std::string(to_string(config.theorem))},
        {"p", config.p.value()},
        {"mode", std::string(to_string(config.mode))},
        {"max_counterexamples", config.max_counterexamples},
    };
    if (config.mode == Mode::sample) {
      cfg["samples"] = config.sample_count;
      cfg["seed"] = config.seed;
    }
    nlohmann::json filters = nlohmann::json::object();
    if (config.filters.min_a) filters["min_a"] = *config.filters.min_a;
    if (config.filters.max_a) filters["max_a"] = *config.filters.max_a;
    if (config.filters.min_b) filters["min_b"] = *config.filters.min_b;
    if (config.filters.max_b) filters["max_b"] = *config.filters.max_b;
    cfg["filters"] = filters;
    if (config.theorem == TheoremId::freiman_24) {
      cfg["freiman_constant"] = config.freiman.constant.to_string();
      cfg["freiman_bound_divisor"] = config.freiman.bound_divisor.to_string();
    }

    nlohmann::json parts = nlohmann::json::array();
    for (const auto& s : partitions) {
      char hex[17];
      std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(s.checksum));
      parts.push_back({{"index", s.index}, {"begin", s.begin}, {"end", s.end},
                       {"instances", s.instances}, {"checksum", hex}});
    }

    nlohmann::json j = {
        {"schema", kSchemaVersion},
        {"config", cfg},
        {"space_size", space_size},
        {"instances_tested", instances_tested},
        {"instances_skipped", instances_skipped},
        {"hypothesis_met_count", hypothesis_met_count},
        {"failure_count", failure_count},
        {"conclusion_failures", conclusion_failures},
        {"partitions", parts},
    };
    if (include_timing) {
      j["elapsed_ms"] = elapsed_ms;
      j["workers"] = config.workers;
    }
    return j;
  }

  std::string to_json_string(bool include_timing = false) const { return to_json(include_timing).dump(2) + "\n"; }

  /// Projection of the same data: summary fields, then one row per recorded
  /// counterexample.
  std::string to_csv() const {
    auto quote = [](const std::string& s) {
      std::string out = "\"";
      for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
      return out + "\"";
    };
    std::string out = "field,value\n";
    out += "schema," + std::string(kSchemaVersion) + "\n";
    out += "theorem," + std::string(to_string(config.theorem)) + "\n";
    out += "p," + std::to_string(config.p.value()) + "\n";
    out += "mode," + std::string(to_string(config.mode)) + "\n";
    out += "space_size," + std::to_string(space_size) + "\n";
    out += "instances_tested," + std::to_string(instances_tested) + "\n";
    out += "instances_skipped," + std::to_string(instances_skipped) + "\n";
    out += "hypothesis_met_count," + std::to_string(hypothesis_met_count) + "\n";
    out += "failure_count," + std::to_string(failure_count) + "\n";
    for (const auto& c : conclusion_failures) out += "counterexample," + quote(c) + "\n";
    return out;
  }
};

}  // namespace zp::harness
