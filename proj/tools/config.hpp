#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmv/arithmetic.hpp"
#include "dmv/oracle.hpp"

namespace dmv::cli {

struct Config {
  // moment experiment
  double T = 4000, eta = 0.2, mu = 0.1, T0 = 0, c1 = 1.0, c2 = 2.0;
  int oversample = 8;
  double budget = 1e10;
  double tolerance = 1e-3;
  std::string sweep;       // "T1,T2,..."
  std::string dump_nodes;  // CSV path
  // cutoffs
  std::int64_t prime_cutoff = 1000000;
  std::int64_t q_cutoff = 10000;
  // verify
  std::uint64_t seed = 20260101;
  std::vector<std::string> suites;
  bool experiments = false;
  double perturb_delta1 = 0;
  // adsum
  double X = 1e6;
  std::string r_list = "1,2,3,12";
  std::string profile = "smooth";
  std::string shifts_I = "0.04,0", shifts_J = "0.03,0";
  double ad_tolerance = 0.10;
  // output
  std::string out;
};

void add_shared_options(CLI::App& app, Config& cfg);
void add_moment_options(CLI::App& cmd, Config& cfg);
void add_verify_options(CLI::App& cmd, Config& cfg);
void add_adsum_options(CLI::App& cmd, Config& cfg);

// DomainError on malformed input.
std::vector<double> parse_reals(const std::string& list);
ShiftSet parse_shifts(const std::string& list);
MomentExperiment experiment(const Config& cfg, double T);

}  // namespace dmv::cli
