// One PASS/FAIL line per acceptance criterion.  With --criterion N only that
// criterion runs; without it all of them do.  Exit status is non-zero if any
// selected criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmv/checks.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  double budget_seconds;
};

const std::vector<Criterion> kCriteria{
    {1, "cancellation C(0..3) and C(4) vs sum Q_j", {"cancellation"}, 5},
    {2, "Q_j two-form equivalence", {"q_form_equivalence"}, 1},
    {3, "Q_4 / w_2 leading-order identity", {"q4_w2_identity"}, 1},
    {4, "constants delta_0, a_2, gamma_0, zeta'(2)", {"constants"}, 30},
    {5, "residue-calculus suite", {"residues", "limit_lemma"}, 5},
    {6, "M0 contour vs residues", {"m0_contour"}, 60},
    {7, "additive divisor sums at X = 1e6", {"additive_divisor"}, 300},
    {8, "moment experiment T = 1000, 2000, 4000", {"moment"}, 900},
    {9, "identity and property suites", {"identities"}, 120},
};

bool run(const Criterion& c, const dmv::CheckOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<dmv::CheckResult> results;
  for (const auto& s : c.suites)
    for (auto& r : dmv::run_suite(s, opts)) results.push_back(std::move(r));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= c.budget_seconds;
  const bool pass = dmv::all_pass(results) && in_time;
  for (const auto& r : results)
    std::printf("    %s  %s: %.3e (limit %.1e)%s%s\n", r.pass ? "ok  " : "FAIL", r.name.c_str(), r.value, r.tolerance,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
  std::printf("    %s  runtime %.1f s (limit %.0f s)\n", in_time ? "ok  " : "FAIL", secs, c.budget_seconds);
  std::printf("criterion %d %s: %s\n", c.id, c.title, pass ? "PASS" : "FAIL");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  dmv::CheckOptions opts;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--seed", opts.seed, "Seed for random evaluation points");
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (const auto& c : kCriteria)
    if (only == 0 || only == c.id) ok = run(c, opts) && ok;
  return ok ? 0 : 1;
}
