// Acceptance run: one line per criterion, exit status 1 if any fails.
//
// Hypothesis counts are cross-checks against an independent brute-force
// enumeration; a mismatch fails the criterion even with zero counterexamples.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "zp/harness.hpp"
#include "zp/zp.hpp"

namespace {

using namespace zp;
using namespace zp::harness;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    note(why);
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Expect {
  std::uint64_t hypothesis_met;
};

/// Exhaustive run of `id` for every p in `expected`; counterexamples and
/// hypothesis counts are checked against the table.
void sweep(Outcome& out, TheoremId id, const std::map<std::uint32_t, Expect>& expected) {
  for (const auto& [p, want] : expected) {
    RunConfig cfg{id, PrimeModulus(p)};
    cfg.workers = workers();
    const auto r = verify(cfg);
    const std::string tag = std::string(to_string(id)) + " p=" + std::to_string(p);
    if (r.instances_tested + r.instances_skipped != r.space_size) out.fail(tag + " incomplete enumeration");
    if (r.hypothesis_met_count != want.hypothesis_met)
      out.fail(tag + " hypotheses met " + std::to_string(r.hypothesis_met_count) + ", oracle " +
               std::to_string(want.hypothesis_met));
    if (r.failure_count != 0) {
      out.fail(tag + ": " + std::to_string(r.failure_count) + " counterexamples, first " + r.conclusion_failures.front());
    }
  }
}

Outcome cauchy_davenport_criterion() {
  Outcome out;
  sweep(out, TheoremId::cauchy_davenport,
        {{2, {4}}, {3, {27}}, {5, {475}}, {7, {6419}}, {11, {948882}}});
  const auto t0 = std::chrono::steady_clock::now();
  sweep(out, TheoremId::cauchy_davenport, {{13, {10909964}}});
  const double s = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "p=13 in %.1f s with %u workers", s, workers());
  if (s >= 120) out.fail(buf);
  else out.note(buf);
  return out;
}

Outcome vosper_criterion() {
  Outcome out;
  sweep(out, TheoremId::vosper, {{2, {0}}, {3, {0}}, {5, {150}}, {7, {1666}}, {11, {39204}}, {13, {151762}}});
  return out;
}

Outcome hsz_criterion() {
  // Witness revalidation (shared difference, exact lengths) happens inside
  // the harness; an invalid witness is counted as a failure.
  Outcome out;
  sweep(out, TheoremId::hsz_standard, {{2, {0}}, {3, {0}}, {5, {0}}, {7, {147}}, {11, {13915}}, {13, {85176}}});
  sweep(out, TheoremId::hsz_conjecture, {{2, {0}}, {3, {0}}, {5, {0}}, {7, {147}}, {11, {13310}}, {13, {79092}}});
  return out;
}

Outcome theorem_con_criterion() {
  Outcome out;
  sweep(out, TheoremId::theorem_con, {{2, {0}}, {3, {0}}, {5, {50}}, {7, {1078}}, {11, {65824}}, {13, {442442}}});
  return out;
}

Outcome freiman_3k3_criterion() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  sweep(out, TheoremId::freiman_3k3,
        {{2, {0}}, {3, {0}}, {5, {0}}, {7, {21}}, {11, {220}}, {13, {312}}, {17, {1904}}, {19, {7695}}, {23, {33143}}});
  const double s = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "all p <= 23 in %.1f s", s);
  if (s >= 60) out.fail(buf);
  else out.note(buf);
  return out;
}

Outcome erdos_heilbronn_criterion() {
  Outcome out;
  std::map<std::uint32_t, Expect> all;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u}) all[p] = {(std::uint64_t{1} << p) - 1 - p};
  sweep(out, TheoremId::erdos_heilbronn, all);
  return out;
}

Outcome davenport_criterion() {
  Outcome out;
  const std::map<std::uint32_t, Expect> admissible = {{2, {0}}, {3, {6}}, {5, {160}}, {7, {2338}}, {11, {349074}}};
  sweep(out, TheoremId::davenport, admissible);
  for (const auto& [p, want] : admissible) {
    RunConfig cfg{TheoremId::lemma1, PrimeModulus(p)};
    cfg.workers = workers();
    const auto r = verify(cfg);
    if (r.instances_tested != want.hypothesis_met) out.fail("lemma1 p=" + std::to_string(p) + " tested count");
    if (r.failure_count != 0) out.fail("lemma1 p=" + std::to_string(p) + ": " + r.conclusion_failures.front());
  }
  return out;
}

Outcome symmetry_criterion() {
  Outcome out;
  sweep(out, TheoremId::symmetry, {{2, {4}}, {3, {27}}, {5, {475}}, {7, {6419}}, {11, {948882}}});
  return out;
}

Outcome kernel_criterion() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 31u, 61u, 127u}) {
    const PrimeModulus m(p);
    std::size_t mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
      // Vary density so small, sparse and near-full sets all occur.
      const double da = std::uniform_real_distribution<>(0.02, 1.0)(rng);
      const double db = std::uniform_real_distribution<>(0.02, 1.0)(rng);
      ResidueSet a(m), b(m);
      for (std::uint32_t r = 0; r < p; ++r) {
        if (std::bernoulli_distribution(da)(rng)) a.insert(r);
        if (std::bernoulli_distribution(db)(rng)) b.insert(r);
      }
      if (a.is_empty()) a.insert(static_cast<Residue>(rng() % p));
      if (b.is_empty()) b.insert(static_cast<Residue>(rng() % p));
      const auto want = oracle::naive_sumset(oracle::members_of(a), oracle::members_of(b), p);
      if (oracle::members_of(sumset(a, b)) != want) ++mismatches;
    }
    if (mismatches) out.fail("p=" + std::to_string(p) + ": " + std::to_string(mismatches) + " mismatches");
  }
  if (out.pass) out.note("8 x 10^4 instances equal");
  return out;
}

Outcome determinism_criterion() {
  Outcome out;
  std::vector<RunConfig> configs;
  auto add = [&](TheoremId id, std::uint32_t p, Mode mode, std::uint64_t n, std::uint64_t seed) {
    RunConfig c{id, PrimeModulus(p)};
    c.mode = mode;
    c.sample_count = n;
    c.seed = seed;
    configs.push_back(c);
  };
  add(TheoremId::vosper, 11, Mode::exhaustive, 0, 0);
  add(TheoremId::lemma2, 13, Mode::exhaustive, 0, 0);
  add(TheoremId::hsz_standard, 31, Mode::sample, 20000, 7);
  add(TheoremId::davenport, 17, Mode::sample, 5000, 11);
  add(TheoremId::freiman_3k3, 61, Mode::sample, 20000, 3);
  {
    // Counterexample-heavy run so the capped list itself is compared.
    RunConfig c{TheoremId::freiman_3k3, PrimeModulus(19)};
    c.max_counterexamples = 50;
    configs.push_back(c);
  }
  for (auto cfg : configs) {
    cfg.workers = 1;
    const std::string base = verify(cfg).to_json_string();
    for (unsigned w : {1u, 2u, 3u, 8u}) {
      cfg.workers = w;
      if (verify(cfg).to_json_string() != base)
        out.fail(std::string(to_string(cfg.theorem)) + " differs at workers=" + std::to_string(w));
    }
  }
  if (out.pass) out.note(std::to_string(configs.size()) + " configs x workers {1,2,3,8} identical");
  return out;
}

Outcome diameter_criterion() {
  Outcome out;
  std::uint64_t sets = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    const PrimeModulus m(p);
    const oracle::ProgressionTable table(p);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p); ++mask, ++sets) {
      const ResidueSet a = ResidueSet::from_mask(m, mask);
      if (diameter(a) != table.diameter(mask)) out.fail("mismatch at " + a.to_string());
    }
  }
  if (out.pass) out.note(std::to_string(sets) + " sets equal");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cauchy-davenport exhaustive p<=13", cauchy_davenport_criterion},
      {"vosper exhaustive p<=13", vosper_criterion},
      {"hsz both variants exhaustive p<=13", hsz_criterion},
      {"diam(A)<=|A|+r exhaustive p<=13", theorem_con_criterion},
      {"3k-4 single sets exhaustive p<=23", freiman_3k3_criterion},
      {"erdos-heilbronn exhaustive p<=19", erdos_heilbronn_criterion},
      {"davenport transform suite p<=11", davenport_criterion},
      {"symmetry identity p<=11", symmetry_criterion},
      {"sumset kernel vs naive oracle", kernel_criterion},
      {"report determinism across workers", determinism_criterion},
      {"diameter vs brute force p<=11", diameter_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("criterion %2zu %s  %s (%.1f s)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
