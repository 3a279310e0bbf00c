#include "config.hpp"

#include <sstream>

#include "dmv/errors.hpp"

namespace dmv::cli {

void add_shared_options(CLI::App& app, Config& cfg) {
  app.set_config("--config", "", "Flat key = value file; command-line flags override it");
  app.add_option("--mu", cfg.mu, "Smoothing kernel transition width")->capture_default_str()->check(CLI::Range(0.01, 0.49));
  app.add_option("--prime-cutoff", cfg.prime_cutoff, "Prime cutoff for Euler products")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t(100), std::int64_t(10000000)));
  app.add_option("--q-cutoff", cfg.q_cutoff, "Truncation of the q-series in the additive main term")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t(2), std::int64_t(10000000)));
  app.add_option("--seed", cfg.seed, "Seed for random evaluation points")->capture_default_str();
  app.add_option("--out", cfg.out, "Write the report here instead of standard output");
}

void add_moment_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--T", cfg.T, "Height T; the window covers [c1 T, c2 T]")->capture_default_str()->check(CLI::PositiveNumber);
  cmd.add_option("--eta", cfg.eta, "K = T^(1 + eta)")->capture_default_str()->check(CLI::Range(0.01, 0.99));
  cmd.add_option("--T0", cfg.T0, "Window transition width; 0 selects T/4")->capture_default_str()->check(CLI::NonNegativeNumber);
  cmd.add_option("--c1", cfg.c1, "Window plateau start, in units of T")->capture_default_str();
  cmd.add_option("--c2", cfg.c2, "Window plateau end, in units of T")->capture_default_str();
  cmd.add_option("--oversample", cfg.oversample, "Gauss nodes per panel of width 2 pi / log K (4, 8, 16, 32)")
      ->capture_default_str()
      ->check(CLI::IsMember({4, 8, 16, 32}));
  cmd.add_option("--budget", cfg.budget, "Refuse runs whose term-node product exceeds this")->capture_default_str();
  cmd.add_option("--tolerance", cfg.tolerance, "Node-doubling tolerance, relative")->capture_default_str();
  cmd.add_option("--sweep", cfg.sweep, "Comma-separated list of T; one report per T");
  cmd.add_option("--dump-nodes", cfg.dump_nodes, "CSV of the fine-pass nodes (t, |A|^2, omega)");
}

void add_verify_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--suite", cfg.suites, "Run only these suites (repeatable)");
  cmd.add_flag("--experiments", cfg.experiments, "Also run the additive-divisor and moment experiments");
  cmd.add_option("--test-perturb-delta1", cfg.perturb_delta1, "Test hook: add this to delta_1 in the Q-polynomials");
}

void add_adsum_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--X", cfg.X, "Box scale; F lives on [X, 2X] x [X, 2X]")->capture_default_str()->check(CLI::Range(1.0, 5e6));
  cmd.add_option("--r", cfg.r_list, "Comma-separated shifts r")->capture_default_str();
  cmd.add_option("--profile", cfg.profile, "Test-function profile")->capture_default_str()->check(CLI::IsMember({"smooth", "box"}));
  cmd.add_option("--shifts-I", cfg.shifts_I, "Shifts of the first divisor function")->capture_default_str();
  cmd.add_option("--shifts-J", cfg.shifts_J, "Shifts of the second divisor function")->capture_default_str();
  cmd.add_option("--max-deviation", cfg.ad_tolerance, "Relative deviation allowed per r")->capture_default_str();
}

std::vector<double> parse_reals(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("cannot parse '" + item + "' as a number");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw DomainError("cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty list");
  return out;
}

ShiftSet parse_shifts(const std::string& list) {
  std::vector<cplx> s;
  for (double v : parse_reals(list)) s.emplace_back(v, 0.0);
  return ShiftSet(std::move(s));
}

MomentExperiment experiment(const Config& cfg, double T) {
  MomentExperiment e;
  e.T = T;
  e.eta = cfg.eta;
  e.mu = cfg.mu;
  e.T0 = cfg.T0;
  e.c1 = cfg.c1;
  e.c2 = cfg.c2;
  e.oversample = cfg.oversample;
  e.budget = cfg.budget;
  e.tolerance = cfg.tolerance;
  (void)e.window();  // validates T0, c1, c2
  return e;
}

}  // namespace dmv::cli
