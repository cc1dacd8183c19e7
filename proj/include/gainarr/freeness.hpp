#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gainarr/charpoly.hpp"
#include "gainarr/gain_graph.hpp"
#include "gainarr/int_polynomial.hpp"

namespace gainarr {

/// Exponents as an ascending multiset.
using ExponentMultiset = std::vector<std::int64_t>;

/// Roots of chi when it splits over the nonnegative integers. Throws on a
/// non-monic chi or a degree different from `ambient`.
std::optional<ExponentMultiset> exponents_from_chi(const IntPolynomial& chi, std::size_t ambient);

/// Multiset inclusion of ascending sequences.
bool multiset_includes(const ExponentMultiset& big, const ExponentMultiset& small);

enum class FreenessMode { InductiveAlongEdges, DivisionalAlongEdges };

enum class Refutation {
  None,
  NonIntegerRoots,
  ExponentNonInclusion,
  NonDivisibility,
  SubgraphNotFree,
  NoAdmissibleEdge,
};

const char* refutation_name(Refutation r);
const char* mode_name(FreenessMode m);

/// One node of a yes-witness. Children index into the witness list; shared
/// subgraphs appear once.
struct WitnessStep {
  GainGraph graph;
  std::optional<EdgeClass> edge;  // empty for an edgeless graph
  std::string chi;
  std::string chi_contraction;
  std::string chi_deletion;  // inductive mode only
  std::optional<std::size_t> contraction;
  std::optional<std::size_t> deletion;
};

struct EdgeRejection {
  EdgeClass edge;
  Refutation reason = Refutation::None;
};

struct FreenessCertificate {
  bool verdict = false;
  ArrangementKind kind = ArrangementKind::Bias;
  FreenessMode mode = FreenessMode::DivisionalAlongEdges;
  std::string chi;
  std::optional<ExponentMultiset> exponents;
  std::vector<WitnessStep> witness;  // yes: root first, preorder
  Refutation reason = Refutation::None;  // no: why the root fails
  std::vector<EdgeRejection> rejections;  // no: per edge at the root
  std::size_t nodes = 0;  // graphs decided during this call
};

struct FreenessOptions {
  std::size_t node_cap = 100000;
  bool witness = true;  // corpus sweeps only need the verdict
};

/// Decides inductive or divisional freeness along edges of c A(G)
/// (`ConeAffinographic`) or B(G) (`Bias`). Edges are tried in ascending
/// order with full backtracking; results are memoized across calls.
FreenessCertificate decide_along_edges(const GainGraph& g, ArrangementKind kind, FreenessMode mode,
                                       const FreenessOptions& opts = {});
FreenessCertificate if_along_edges(const GainGraph& g, ArrangementKind kind, const FreenessOptions& opts = {});
FreenessCertificate df_along_edges(const GainGraph& g, ArrangementKind kind, const FreenessOptions& opts = {});

/// Verdict only, straight from the memo table.
bool free_along_edges(const GainGraph& g, ArrangementKind kind, FreenessMode mode,
                      std::size_t node_cap = FreenessOptions{}.node_cap);

/// Re-derives every fact a yes-witness states. Returns false on any mismatch.
bool replay_witness(const FreenessCertificate& c);

void clear_freeness_cache();

}  // namespace gainarr
