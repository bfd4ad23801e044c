#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "helly/analysis.hpp"
#include "helly/errors.hpp"
#include "helly/experiment.hpp"
#include "helly/generators.hpp"
#include "helly/io.hpp"
#include "helly/rng.hpp"
#include "helly/tester.hpp"
#include "helly/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct GenArgs {
  std::string kind;
  std::int64_t n = 0;
  int d = 1;
  std::uint64_t seed = 0;
  std::int64_t k = -1;
  std::string out;
};

struct TestArgs {
  std::string input;
  double alpha = 0.5;
  double epsilon = 0.01;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::optional<std::int64_t> max_iters;
  std::optional<std::int64_t> rounds;
};

struct EnumArgs {
  std::string input;
  int q = 2;
  std::optional<double> alpha;
};

struct CalArgs {
  std::string input;
  double alpha = 0.5;
  double epsilon = 0.01;
  std::int64_t trials = 20000;
  std::uint64_t master_seed = 0;
  bool csv = false;
};

void print_warnings(const helly::Instance& inst) {
  for (const auto& w : helly::validate_instance(inst)) std::cerr << "warning: " << w << "\n";
}

int run_gen(const GenArgs& a) {
  helly::GenSpec spec;
  spec.n = a.n;
  spec.d = a.d;
  spec.seed = a.seed;
  spec.k = a.k;
  if (a.kind == "common-point") {
    spec.kind = helly::GenKind::CommonPoint;
  } else if (a.kind == "disjoint") {
    spec.kind = helly::GenKind::PairwiseDisjoint;
  } else if (a.kind == "calibrated1d") {
    spec.kind = helly::GenKind::Calibrated1D;
    if (a.k < 0) {
      std::cerr << "gen: --kind calibrated1d requires --k\n";
      return kExitUsage;
    }
    if (a.d != 1) {
      std::cerr << "gen: calibrated1d instances are one-dimensional (--d 1)\n";
      return kExitUsage;
    }
  } else {
    spec.kind = helly::GenKind::RandomLinear;
  }

  const helly::Instance inst = helly::generate(spec);
  const std::string text = helly::serialize_instance(inst);
  if (a.out.empty())
    std::cout << text;
  else
    helly::save_text(text, a.out);
  return kExitPass;
}

int run_test(const TestArgs& a) {
  const helly::Instance inst = helly::load_instance(a.input);
  print_warnings(inst);

  helly::TesterConfig cfg;
  cfg.alpha = a.alpha;
  cfg.epsilon = a.epsilon;
  cfg.rng_seed = a.seed;
  cfg.oracle.rng_seed = helly::derive_seed(a.seed, 0xD1CE);
  if (a.tol) {
    cfg.oracle.feas_tol = *a.tol;
    cfg.oracle.proj_tol = *a.tol;
  }
  if (a.max_iters) cfg.oracle.proj_max_iters = *a.max_iters;
  if (a.rounds) cfg.rounds_override = *a.rounds;

  const std::int64_t t = cfg.rounds_override
                             ? *cfg.rounds_override
                             : helly::compute_rounds(cfg.alpha, cfg.epsilon);
  const helly::Verdict v = helly::run_tester(inst, cfg);
  std::cout << helly::result_to_json(v, cfg, t).dump(2) << "\n";
  return v.pass ? kExitPass : kExitFail;
}

int run_enumerate(const EnumArgs& a) {
  const helly::Instance inst = helly::load_instance(a.input);
  print_warnings(inst);

  helly::OracleConfig oc;
  nlohmann::json out;
  out["census"] = helly::census_to_json(
      helly::count_intersecting_tuples(inst, a.q, oc));
  out["depth"] = helly::depth_to_json(helly::depth_bruteforce(inst, oc));
  if (a.alpha)
    out["corollary"] =
        helly::corollary_to_json(helly::verify_corollary(inst, *a.alpha, oc));
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int run_calibrate(const CalArgs& a) {
  const helly::Instance inst = helly::load_instance(a.input);
  print_warnings(inst);

  helly::TesterConfig cfg;
  cfg.alpha = a.alpha;
  cfg.epsilon = a.epsilon;
  const helly::CalibrationReport rep =
      helly::calibrate(inst, cfg, a.trials, a.master_seed);
  if (a.csv) {
    std::cout << helly::kCalibrationCsvHeader << "\n"
              << helly::calibration_csv_row(rep) << "\n";
  } else {
    std::cout << helly::calibration_to_json(rep).dump(2) << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized intersection testing for families of convex sets"};
  app.set_version_flag("--version",
                       std::string(helly::kToolName) + " " + helly::kToolVersion);
  app.require_subcommand(1);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--kind", ga.kind, "Family shape")
      ->required()
      ->check(CLI::IsMember(
          {"common-point", "disjoint", "calibrated1d", "random-linear"}));
  gen->add_option("--n", ga.n, "Number of sets")->required();
  gen->add_option("--d", ga.d, "Ambient dimension");
  gen->add_option("--seed", ga.seed, "Generator seed")->required();
  gen->add_option("--k", ga.k, "Intersecting-interval count (calibrated1d)");
  gen->add_option("--out", ga.out, "Output path (stdout when omitted)");

  TestArgs ta;
  auto* test = app.add_subcommand("test", "Run the randomized intersection test");
  test->add_option("--input", ta.input, "Instance file")->required();
  test->add_option("--alpha", ta.alpha, "Per-round bound, in (0,1)");
  test->add_option("--epsilon", ta.epsilon, "Failure probability target, in (0,1)");
  test->add_option("--seed", ta.seed, "Run seed");
  test->add_option("--tol", ta.tol, "Membership tolerance for both oracle paths");
  test->add_option("--max-iters", ta.max_iters, "Projection iteration cap");
  test->add_option("--rounds", ta.rounds, "Round-count override");

  EnumArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive ground truth");
  enumerate->add_option("--input", ea.input, "Instance file")->required();
  enumerate->add_option("--q", ea.q, "Tuple size for the census")->required();
  enumerate->add_option("--alpha", ea.alpha,
                        "Also check the depth/census implication at this alpha");

  CalArgs ca;
  auto* cal = app.add_subcommand("calibrate", "Monte Carlo pass-rate calibration");
  cal->add_option("--input", ca.input, "Instance file")->required();
  cal->add_option("--alpha", ca.alpha, "Per-round bound, in (0,1)");
  cal->add_option("--epsilon", ca.epsilon, "Failure probability target, in (0,1)");
  cal->add_option("--trials", ca.trials, "Trial count, >= 1000");
  cal->add_option("--master-seed", ca.master_seed, "Seed for the trial chain");
  cal->add_flag("--csv", ca.csv, "Emit a CSV row instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(ga);
    if (test->parsed()) return run_test(ta);
    if (enumerate->parsed()) return run_enumerate(ea);
    return run_calibrate(ca);
  } catch (const helly::ParamOutOfRange& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const helly::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntime;
  }
}
