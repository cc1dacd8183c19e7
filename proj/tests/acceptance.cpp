// Runs every acceptance criterion at the default bounds and prints one
// PASS/FAIL line per criterion. Exit status is 0 only if all pass.
// An optional argument names a file for the full JSON report.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include "gainarr/verify.hpp"

using namespace gainarr;

int main(int argc, char** argv) {
  const VerifyConfig cfg;
  std::vector<std::function<std::vector<CriterionReport>()>> steps{
      [&] { return run_corpus_criteria(cfg); },
      [&] { return std::vector{run_digraph_criterion(cfg)}; },
      [&] { return std::vector{run_signed_criterion(cfg)}; },
      [&] { return std::vector{run_threshold_criterion(cfg)}; },
      [&] { return std::vector{run_family_criterion(cfg)}; },
      [&] { return std::vector{run_exp2_criterion(cfg)}; },
      [&] { return std::vector{run_coincidence3_criterion(cfg)}; },
      [&] { return std::vector{run_property_criterion(cfg)}; },
  };
  SuiteReport all{"acceptance", cfg, {}};
  for (const auto& step : steps) {
    const auto start = std::chrono::steady_clock::now();
    const auto reports = step();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& r : reports) {
      std::size_t instances = 0;
      for (const auto& c : r.checks) instances += c.instances;
      std::printf("[%d] %s: %s (%zu instances, %.1f s)\n", r.id, r.title.c_str(), r.pass() ? "PASS" : "FAIL", instances,
                  secs);
      for (const auto& c : r.checks) {
        if (!c.pass()) std::printf("    failing check: %s (%zu of %zu)\n", c.name.c_str(), c.failures, c.instances);
      }
      std::fflush(stdout);
      all.criteria.push_back(r);
    }
  }
  if (argc > 1) std::ofstream(argv[1]) << to_json(all).dump(2) << '\n';
  const bool ok = all.pass();
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
