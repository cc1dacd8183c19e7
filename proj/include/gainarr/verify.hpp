#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gainarr/gain_graph.hpp"
#include "gainarr/io.hpp"

namespace gainarr {

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::size_t random_graphs = 500;
  int corpus_max_vertices = 4;
  int corpus_max_edges = 6;
  int corpus_gain_bound = 2;
  std::size_t workers = 0;  // 0: one per hardware thread
  std::size_t max_examples = 3;
  std::size_t node_cap = 100000;
};

/// One named property checked over many instances.
struct Check {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<Json> examples;  // first failing instances

  bool pass() const { return instances > 0 && failures == 0; }
  void record(bool ok, const std::function<Json()>& describe, std::size_t max_examples);
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::deque<Check> checks;  // stable references as checks are added
  Json notes = Json::object();  // grid sizes and similar context

  bool pass() const;
  Check& check(const std::string& name);
};

struct SuiteReport {
  std::string suite;
  VerifyConfig config;
  std::vector<CriterionReport> criteria;

  bool pass() const;
};

Json to_json(const VerifyConfig& c);
Json to_json(const Check& c);
Json to_json(const CriterionReport& r);
Json to_json(const SuiteReport& r);

/// Chi identity, cross-oracle agreement and cone/bias freeness agreement
/// over the exhaustive small corpus plus seeded random graphs (ids 1-3).
std::vector<CriterionReport> run_corpus_criteria(const VerifyConfig& cfg);
CriterionReport run_digraph_criterion(const VerifyConfig& cfg);      // 4
CriterionReport run_signed_criterion(const VerifyConfig& cfg);       // 5
CriterionReport run_threshold_criterion(const VerifyConfig& cfg);    // 6
CriterionReport run_family_criterion(const VerifyConfig& cfg);       // 7
CriterionReport run_exp2_criterion(const VerifyConfig& cfg);         // 8
CriterionReport run_coincidence3_criterion(const VerifyConfig& cfg); // 9
CriterionReport run_property_criterion(const VerifyConfig& cfg);     // 10

/// coincidence, families, signed, lowdim, properties or all.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);
const std::vector<std::string>& suite_names();

/// Every integer-gain graph on 1..l (l <= max_vertices) with at most
/// max_edges classes and gains in [-bound, bound], then every signed graph
/// on at most max_vertices vertices, in a fixed order.
void for_each_corpus_graph(int max_vertices, int max_edges, int bound, const std::function<void(const GainGraph&)>& f);

/// Uniform-ish random graph with `edges` distinct classes (fewer if the
/// class space is smaller). Gains in [lo, hi] for integers, all of F_p
/// otherwise.
GainGraph random_gain_graph(std::mt19937_64& rng, GainGroup group, int l, int edges, Gain lo = -2, Gain hi = 2);

/// Deletes edges one at a time as long as `fails` stays true.
GainGraph minimize_failure(const GainGraph& g, const std::function<bool(const GainGraph&)>& fails);

/// Runs fn(0..n-1) on up to `workers` threads.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn);

}  // namespace gainarr
