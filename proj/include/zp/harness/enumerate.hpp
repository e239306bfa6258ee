#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "zp/davenport.hpp"
#include "zp/harness/config.hpp"
#include "zp/harness/report.hpp"
#include "zp/harness/splitmix.hpp"
#include "zp/residue_set.hpp"
#include "zp/setops.hpp"
#include "zp/theorems.hpp"

namespace zp::harness {

/// A theorem checker bound to the arity of its instance kind. Exactly the
/// member matching `kind` is set.
struct Checker {
  InstanceKind kind;
  std::function<TheoremVerdict(const ResidueSet&)> single;
  std::function<TheoremVerdict(const ResidueSet&, const ResidueSet&)> pair;
  std::function<TheoremVerdict(const ResidueSet&, Residue)> with_difference;
};

inline Checker checker_for(TheoremId id, const Freiman24Params& freiman = {}) {
  Checker c{kind_of(id), {}, {}, {}};
  switch (id) {
    case TheoremId::cauchy_davenport: c.pair = cauchy_davenport; break;
    case TheoremId::vosper: c.pair = vosper; break;
    case TheoremId::hsz_standard:
      c.pair = [](const ResidueSet& a, const ResidueSet& b) { return hsz(a, b, HszVariant::standard); };
      break;
    case TheoremId::hsz_conjecture:
      c.pair = [](const ResidueSet& a, const ResidueSet& b) { return hsz(a, b, HszVariant::conjecture); };
      break;
    case TheoremId::theorem_con: c.pair = theorem_con; break;
    case TheoremId::symmetry: c.pair = symmetry_identity; break;
    case TheoremId::freiman_3k3: c.single = freiman_3k3; break;
    case TheoremId::freiman_24:
      c.single = [freiman](const ResidueSet& a) { return freiman_24(a, freiman); };
      break;
    case TheoremId::erdos_heilbronn: c.single = erdos_heilbronn; break;
    case TheoremId::lemma2: c.with_difference = lemma2_two_point; break;
    case TheoremId::davenport:
      c.pair = [](const ResidueSet& a, const ResidueSet& b) { return transform_suite(TransformContext::build(a, b)); };
      break;
    case TheoremId::lemma1:
      c.pair = [](const ResidueSet& a, const ResidueSet& b) { return lemma1_check(TransformContext::build(a, b)); };
      break;
  }
  return c;
}

namespace detail {

inline constexpr int kMaxDrawAttempts = 10000;

/// Accumulates one partition. Only this partition's worker touches it.
class PartitionRun {
 public:
  PartitionRun(const RunConfig& cfg, PartitionSummary& summary) : cfg_(cfg), summary_(summary) {
    summary_.checksum = kFnvOffset;
  }

  void skip() { ++skipped_; }

  void record(const TheoremVerdict& v) {
    unsigned outcome = 0;
    if (v.hypotheses_met()) {
      ++hyp_met_;
      outcome = 1;
      if (v.is_counterexample()) {
        outcome = 2;
        fail(v.to_string());
      } else if (!revalidate(v)) {
        outcome = 3;
        fail("witness-invalid " + v.to_string());
      }
    }
    mix(summary_.instances * 4 + outcome);
    ++summary_.instances;
  }

  std::uint64_t skipped() const { return skipped_; }
  std::uint64_t hyp_met() const { return hyp_met_; }
  std::uint64_t failures() const { return failures_; }
  std::vector<std::string>& counterexamples() { return counterexamples_; }

 private:
  static constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
  static constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

  void fail(std::string s) {
    ++failures_;
    if (counterexamples_.size() < cfg_.max_counterexamples) counterexamples_.push_back(std::move(s));
  }

  void mix(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      summary_.checksum ^= (x >> (8 * i)) & 0xff;
      summary_.checksum *= kFnvPrime;
    }
  }

  const RunConfig& cfg_;
  PartitionSummary& summary_;
  std::uint64_t skipped_ = 0, hyp_met_ = 0, failures_ = 0;
  std::vector<std::string> counterexamples_;
};

inline std::uint32_t min_size_a(InstanceKind kind) {
  return kind == InstanceKind::single_at_least_two || kind == InstanceKind::set_with_difference ? 2 : 1;
}

inline void run_exhaustive_partition(const RunConfig& cfg, const Checker& chk, PartitionRun& run,
                                     std::uint64_t begin, std::uint64_t end) {
  const PrimeModulus m = cfg.p;
  const std::uint32_t p = m.value();
  const std::uint64_t all = (std::uint64_t{1} << p) - 1;
  const auto& f = cfg.filters;
  for (std::uint64_t am = begin; am < end; ++am) {
    const ResidueSet a = ResidueSet::from_mask(m, am);
    const std::size_t ka = a.size();
    switch (chk.kind) {
      case InstanceKind::single:
      case InstanceKind::single_at_least_two:
        if (ka < min_size_a(chk.kind)) break;  // outside the domain, not counted
        if (!f.accepts_a(ka)) run.skip();
        else run.record(chk.single(a));
        break;
      case InstanceKind::set_with_difference:
        if (ka < 2) break;
        for (Residue d = 1; d < p; ++d) {
          if (!f.accepts_a(ka)) run.skip();
          else run.record(chk.with_difference(a, d));
        }
        break;
      case InstanceKind::pair:
        for (std::uint64_t bm = 1; bm <= all; ++bm) {
          const ResidueSet b = ResidueSet::from_mask(m, bm);
          if (!f.accepts_a(ka) || !f.accepts_b(b.size())) run.skip();
          else run.record(chk.pair(a, b));
        }
        break;
      case InstanceKind::admissible_pair:
        for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (p - 1)); ++rest) {
          const ResidueSet b = ResidueSet::from_mask(m, 1 | (rest << 1));
          if (rest == 0 || !f.accepts_a(ka) || !f.accepts_b(b.size()) || sumset(a, b).is_full()) run.skip();
          else run.record(chk.pair(a, b));
        }
        break;
    }
  }
}

/// Uniform subset. With a size bound the size is drawn uniformly from the
/// bounds and the members by Floyd's algorithm; otherwise each of the p bits
/// is an independent fair coin and draws below `min_k` are rejected.
inline std::optional<ResidueSet> draw_set(SplitMix64& rng, PrimeModulus m, std::uint32_t min_k,
                                          std::optional<std::uint32_t> lo, std::optional<std::uint32_t> hi) {
  const std::uint32_t p = m.value();
  if (lo || hi) {
    const std::uint32_t kmin = std::max(min_k, lo.value_or(1));
    const std::uint32_t kmax = std::min(p, hi.value_or(p));
    if (kmin > kmax) return std::nullopt;
    const std::uint32_t k = kmin + static_cast<std::uint32_t>(rng.below(kmax - kmin + 1));
    ResidueSet s(m);
    for (std::uint32_t j = p - k; j < p; ++j) {
      const auto t = static_cast<Residue>(rng.below(j + 1));
      s.insert(s.contains(t) ? j : t);
    }
    return s;
  }
  for (int attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
    ResidueSet s(m);
    auto w = s.mutable_words();
    for (auto& x : w) x = rng();
    w.back() &= ::zp::detail::top_mask(p);
    if (s.size() >= min_k) return s;
  }
  return std::nullopt;
}

inline void run_sample_partition(const RunConfig& cfg, const Checker& chk, PartitionRun& run,
                                  std::uint32_t index, std::uint64_t count) {
  SplitMix64 rng = SplitMix64::for_partition(cfg.seed, index);
  const PrimeModulus m = cfg.p;
  const auto& f = cfg.filters;
  const std::uint32_t min_a = min_size_a(chk.kind);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto a = draw_set(rng, m, min_a, f.min_a, f.max_a);
    if (!a) {
      run.skip();
      continue;
    }
    switch (chk.kind) {
      case InstanceKind::single:
      case InstanceKind::single_at_least_two:
        run.record(chk.single(*a));
        break;
      case InstanceKind::set_with_difference:
        run.record(chk.with_difference(*a, static_cast<Residue>(1 + rng.below(m.value() - 1))));
        break;
      case InstanceKind::pair: {
        auto b = draw_set(rng, m, 1, f.min_b, f.max_b);
        if (!b) run.skip();
        else run.record(chk.pair(*a, *b));
        break;
      }
      case InstanceKind::admissible_pair: {
        bool done = false;
        for (int attempt = 0; attempt < kMaxDrawAttempts && !done; ++attempt) {
          if (attempt > 0) a = draw_set(rng, m, min_a, f.min_a, f.max_a);
          auto b = draw_set(rng, m, 2, f.min_b, f.max_b);
          if (!a || !b) break;
          ResidueSet b0 = normalize_zero_in_b(*b);
          if (sumset(*a, b0).is_full()) continue;
          run.record(chk.pair(*a, b0));
          done = true;
        }
        if (!done) run.skip();
        break;
      }
    }
  }
}

}  // namespace detail

/// Runs `checker` over the configured instance space. The space is cut into
/// kPartitions fixed slices (contiguous A encodings, or equal runs of sample
/// ordinals with one generator stream per slice); workers claim slices from
/// a shared counter and the partial results are merged in slice order, so
/// the report does not depend on the worker count.
inline VerificationReport enumerate(const RunConfig& cfg, const Checker& checker) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint32_t p = cfg.p.value();

  VerificationReport report(cfg);
  report.space_size = cfg.mode == Mode::exhaustive ? space_size(checker.kind, p) : cfg.sample_count;

  const std::uint64_t domain = cfg.mode == Mode::exhaustive ? (std::uint64_t{1} << p) - 1 : cfg.sample_count;
  const std::uint64_t base = cfg.mode == Mode::exhaustive ? 1 : 0;
  const std::uint32_t nparts = static_cast<std::uint32_t>(std::min<std::uint64_t>(kPartitions, domain));
  report.partitions.resize(nparts);
  for (std::uint32_t i = 0; i < nparts; ++i) {
    report.partitions[i].index = i;
    report.partitions[i].begin = base + domain * i / nparts;
    report.partitions[i].end = base + domain * (i + 1) / nparts;
  }

  std::vector<std::optional<detail::PartitionRun>> runs(nparts);
  std::atomic<std::uint32_t> next{0};
  auto work = [&] {
    for (std::uint32_t i; (i = next.fetch_add(1)) < nparts;) {
      auto& summary = report.partitions[i];
      auto& run = runs[i].emplace(cfg, summary);
      if (cfg.mode == Mode::exhaustive)
        detail::run_exhaustive_partition(cfg, checker, run, summary.begin, summary.end);
      else
        detail::run_sample_partition(cfg, checker, run, i, summary.end - summary.begin);
    }
  };
  const unsigned nworkers = std::min<unsigned>(cfg.workers, std::max<std::uint32_t>(nparts, 1));
  if (nworkers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(nworkers);
    for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(work);
  }

  for (std::uint32_t i = 0; i < nparts; ++i) {
    auto& run = *runs[i];
    report.instances_tested += report.partitions[i].instances;
    report.instances_skipped += run.skipped();
    report.hypothesis_met_count += run.hyp_met();
    report.failure_count += run.failures();
    for (auto& c : run.counterexamples())
      if (report.conclusion_failures.size() < cfg.max_counterexamples) report.conclusion_failures.push_back(std::move(c));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

inline VerificationReport verify(const RunConfig& cfg) { return enumerate(cfg, checker_for(cfg.theorem, cfg.freiman)); }

}  // namespace zp::harness
