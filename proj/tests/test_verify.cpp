#include <atomic>
#include <sstream>

#include "doctest.h"
#include "gainarr/cli.hpp"
#include "gainarr/error.hpp"
#include "gainarr/verify.hpp"

using namespace gainarr;

namespace {

VerifyConfig small() {
  VerifyConfig c;
  c.random_graphs = 20;
  c.corpus_max_vertices = 2;
  c.workers = 1;
  return c;
}

}  // namespace

TEST_CASE("Check bookkeeping") {
  Check c{"demo", 0, 0, {}};
  CHECK_FALSE(c.pass());
  int described = 0;
  for (int k = 0; k < 10; ++k) {
    c.record(k != 3 && k != 5 && k != 7, [&] {
      ++described;
      return Json(k);
    }, 2);
  }
  CHECK(c.instances == 10);
  CHECK(c.failures == 3);
  CHECK(c.examples.size() == 2);
  CHECK(described == 2);
  CHECK_FALSE(c.pass());
}

TEST_CASE("for_each_corpus_graph") {
  std::size_t count = 0;
  for_each_corpus_graph(2, 6, 1, [&](const GainGraph&) { ++count; });
  // One vertex: 1 graph. Two vertices: subsets of 3 gains, over Z (8) and F2 (4), plus F2 on one vertex.
  CHECK(count == 1 + 8 + 1 + 4);
}

TEST_CASE("minimize_failure") {
  const GainGraph g = GainGraph::with_vertices(GainGroup::integers(), 4)
                          .add_edge(1, 2, 0)
                          .add_edge(2, 3, 1)
                          .add_edge(3, 4, 0)
                          .add_edge(1, 4, 2);
  const GainGraph m = minimize_failure(g, [](const GainGraph& h) { return h.gains_between(2, 3).size() == 1; });
  CHECK(m.num_edges() == 1);
  CHECK(m.edges()[0] == EdgeClass{2, 3, 1});
}

TEST_CASE("parallel_for") {
  std::atomic<int> sum{0};
  parallel_for(100, 3, [&](std::size_t i) { sum += static_cast<int>(i); });
  CHECK(sum == 4950);
  CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) {
                    if (i == 4) fail(ErrorKind::Verification, "boom");
                  }),
                  Error);
}

TEST_CASE("small suites pass") {
  for (const auto& name : {"coincidence", "families", "signed", "properties"}) {
    const SuiteReport r = run_suite(name, small());
    CHECK_MESSAGE(r.pass(), to_json(r).dump());
  }
  CHECK_THROWS_AS(run_suite("nope", small()), Error);
}

TEST_CASE("verify output is deterministic") {
  const std::vector<std::string> args{"--seed", "5", "verify", "--suite", "coincidence", "--random-graphs", "30",
                                      "--corpus-max-vertices", "2", "--workers", "2"};
  std::ostringstream a, b, ea, eb;
  CHECK(run_cli(args, a, ea) == ExitPass);
  CHECK(run_cli(args, b, eb) == ExitPass);
  CHECK(a.str() == b.str());
  CHECK(ea.str().find("PASS") != std::string::npos);
}
