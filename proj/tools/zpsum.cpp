// zpsum: sumset arithmetic and theorem verification over Z/pZ.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zp/harness.hpp"
#include "zp/zp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::uint32_t p = 0;
  std::string a, b;
  std::optional<std::uint32_t> d;
  std::string theorem;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out, csv;
  std::size_t max_counterexamples = 100;
  std::optional<std::uint32_t> min_a, max_a, min_b, max_b;
  std::string freiman_constant = "2.4";
  std::string freiman_divisor = "35";
  bool timing = false;
  bool normalize = false;
  std::string criterion;
};

zp::ResidueSet parse_set(zp::PrimeModulus m, const std::string& csv, const char* name) {
  zp::ResidueSet s = zp::ResidueSet::parse_csv(m, csv);
  if (s.is_empty()) throw zp::Error(zp::Errc::empty_set, std::string(name) + " must be nonempty");
  return s;
}

void add_filters(CLI::App* cmd, Options& o) {
  cmd->add_option("--min-a", o.min_a, "Lower bound on |A|");
  cmd->add_option("--max-a", o.max_a, "Upper bound on |A|");
  cmd->add_option("--min-b", o.min_b, "Lower bound on |B|");
  cmd->add_option("--max-b", o.max_b, "Upper bound on |B|");
}

zp::harness::SizeFilter filters_of(const Options& o) { return {o.min_a, o.max_a, o.min_b, o.max_b}; }

int run_sumset(const Options& o) {
  zp::PrimeModulus m(o.p);
  std::cout << zp::sumset(parse_set(m, o.a, "--a"), parse_set(m, o.b, "--b")).to_string() << "\n";
  return kExitOk;
}

int run_diam(const Options& o) {
  zp::PrimeModulus m(o.p);
  zp::ResidueSet a = parse_set(m, o.a, "--a");
  zp::ApDescriptor cover = zp::min_cover_ap(a);
  std::cout << "set=" << a.to_string() << "\n"
            << "diam=" << cover.length() << "\n"
            << "cover=" << cover.to_string() << "\n"
            << "is_ap=" << (cover.length() == a.size() ? "yes" : "no") << "\n"
            << "short_covered=" << (zp::is_short_covered(a) ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_transform(const Options& o) {
  zp::PrimeModulus m(o.p);
  zp::ResidueSet a = parse_set(m, o.a, "--a");
  zp::ResidueSet b = parse_set(m, o.b, "--b");
  if (o.normalize) b = zp::normalize_zero_in_b(b);
  auto ctx = zp::TransformContext::build(a, b);
  std::cout << "A=" << ctx.a().to_string() << "\n"
            << "B=" << ctx.b().to_string() << "\n"
            << "A+B=" << ctx.sum().to_string() << "\n"
            << "C=" << ctx.companion().to_string() << "\n"
            << "E=" << ctx.excess().to_string() << "\n"
            << "r=" << ctx.deficiency() << "\n";
  for (const auto& s : zp::all_splits(ctx))
    std::cout << "e=" << s.e << " lower=" << s.lower.to_string() << " upper=" << s.upper.to_string() << "\n";
  auto suite = zp::transform_suite(ctx);
  auto l1 = zp::lemma1_check(ctx);
  std::cout << suite.to_string() << "\n" << l1.to_string() << "\n";
  return suite.is_counterexample() || l1.is_counterexample() ? kExitCounterexample : kExitOk;
}

zp::Freiman24Params freiman_of(const Options& o) {
  zp::Freiman24Params f{zp::Rational::parse(o.freiman_constant), zp::Rational::parse(o.freiman_divisor)};
  f.validate();
  return f;
}

/// Single-instance check when --a is given.
int run_verify_one(zp::TheoremId id, const Options& o) {
  zp::PrimeModulus m(o.p);
  zp::ResidueSet a = parse_set(m, o.a, "--a");
  auto checker = zp::harness::checker_for(id, freiman_of(o));
  std::optional<zp::TheoremVerdict> v;
  switch (checker.kind) {
    case zp::harness::InstanceKind::single:
    case zp::harness::InstanceKind::single_at_least_two:
      v = checker.single(a);
      break;
    case zp::harness::InstanceKind::set_with_difference:
      if (!o.d) throw zp::Error(zp::Errc::bad_parameter, "lemma2 needs --d");
      v = checker.with_difference(a, *o.d);
      break;
    case zp::harness::InstanceKind::pair:
    case zp::harness::InstanceKind::admissible_pair:
      v = checker.pair(a, parse_set(m, o.b, "--b"));
      break;
  }
  std::cout << v->to_string() << "\n";
  const auto& w = v->witness;
  if (w.difference) std::cout << "witness.d=" << *w.difference << "\n";
  if (w.cover_a) std::cout << "witness.cover_a=" << w.cover_a->to_string() << "\n";
  if (w.cover_b) std::cout << "witness.cover_b=" << w.cover_b->to_string() << "\n";
  if (w.deficiency) std::cout << "witness.r=" << *w.deficiency << "\n";
  return v->is_counterexample() || !zp::revalidate(*v) ? kExitCounterexample : kExitOk;
}

int run_verify(const Options& o) {
  auto id = zp::parse_theorem_id(o.theorem);
  if (!id) throw zp::Error(zp::Errc::unknown_theorem, "unknown theorem '" + o.theorem + "'");
  if (!o.a.empty()) return run_verify_one(*id, o);
  if (o.exhaustive == (o.samples > 0))
    throw zp::Error(zp::Errc::bad_parameter, "choose exactly one of --exhaustive or --samples N");

  zp::harness::RunConfig cfg{
      .theorem = *id,
      .p = zp::PrimeModulus(o.p),
      .mode = o.exhaustive ? zp::harness::Mode::exhaustive : zp::harness::Mode::sample,
      .sample_count = o.samples,
      .seed = o.seed,
      .workers = o.workers,
      .filters = filters_of(o),
      .max_counterexamples = o.max_counterexamples,
      .freiman = freiman_of(o),
  };
  auto report = zp::harness::verify(cfg);

  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw zp::Error(zp::Errc::bad_parameter, "cannot write " + o.out);
    f << report.to_json_string(o.timing);
  }
  if (!o.csv.empty()) {
    std::ofstream f(o.csv, std::ios::binary);
    if (!f) throw zp::Error(zp::Errc::bad_parameter, "cannot write " + o.csv);
    f << report.to_csv();
  }
  std::cout << "theorem=" << o.theorem << " p=" << o.p << " mode=" << zp::harness::to_string(cfg.mode)
            << " tested=" << report.instances_tested << " skipped=" << report.instances_skipped
            << " hypotheses_met=" << report.hypothesis_met_count << " failures=" << report.failure_count << "\n";
  for (const auto& c : report.conclusion_failures) std::cout << "  " << c << "\n";
  if (o.timing) std::cerr << "elapsed_ms=" << report.elapsed_ms << " workers=" << o.workers << "\n";
  return report.passed() ? kExitOk : kExitCounterexample;
}

int run_search(const Options& o) {
  zp::harness::SearchConfig cfg{zp::PrimeModulus(o.p), zp::harness::parse_criterion(o.criterion), filters_of(o)};
  auto found = zp::harness::extremal_search(cfg);
  for (const auto& e : found) std::cout << e.to_string() << "\n";
  std::cerr << found.size() << " canonical witnesses\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sumsets, the Davenport transform and inverse theorems over Z/pZ"};
  app.require_subcommand(1);
  Options o;

  auto* sumset = app.add_subcommand("sumset", "Print A+B");
  sumset->add_option("--p", o.p, "Prime modulus")->required();
  sumset->add_option("--a", o.a, "Members of A, comma separated")->required();
  sumset->add_option("--b", o.b, "Members of B, comma separated")->required();

  auto* diam = app.add_subcommand("diam", "Diameter and shortest covering progression of A");
  diam->add_option("--p", o.p, "Prime modulus")->required();
  diam->add_option("--a", o.a, "Members of A")->required();

  auto* transform = app.add_subcommand("transform", "Print E and every Davenport split of (A, B)");
  transform->add_option("--p", o.p, "Prime modulus")->required();
  transform->add_option("--a", o.a, "Members of A")->required();
  transform->add_option("--b", o.b, "Members of B (must contain 0 unless --normalize)")->required();
  transform->add_flag("--normalize", o.normalize, "Translate B so that its least member is 0");

  auto* verify = app.add_subcommand("verify", "Check a theorem on one instance or over a whole space");
  verify->add_option("--theorem", o.theorem, "Theorem id")->required();
  verify->add_option("--p", o.p, "Prime modulus")->required();
  verify->add_option("--a", o.a, "Check a single instance with this A");
  verify->add_option("--b", o.b, "B for single-instance pair theorems");
  verify->add_option("--d", o.d, "Difference for lemma2");
  verify->add_flag("--exhaustive", o.exhaustive, "Enumerate the whole instance space");
  verify->add_option("--samples", o.samples, "Number of pseudorandom instances");
  verify->add_option("--seed", o.seed, "Sampling seed");
  verify->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out, "JSON report path");
  verify->add_option("--csv", o.csv, "CSV projection of the report");
  verify->add_option("--max-counterexamples", o.max_counterexamples, "Counterexamples kept in the report");
  verify->add_option("--freiman-constant", o.freiman_constant, "freiman_24 doubling constant");
  verify->add_option("--freiman-divisor", o.freiman_divisor, "freiman_24 size bound divisor");
  verify->add_flag("--timing", o.timing, "Add elapsed time and worker count to the report");
  add_filters(verify, o);

  auto* search = app.add_subcommand("search", "List canonical extremal instances");
  search->add_option("--p", o.p, "Prime modulus")->required();
  search->add_option("--criterion", o.criterion, "cd_equality | near_3k3 | hsz_tight")->required();
  add_filters(search, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sumset) return run_sumset(o);
    if (*diam) return run_diam(o);
    if (*transform) return run_transform(o);
    if (*verify) return run_verify(o);
    if (*search) return run_search(o);
  } catch (const zp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
