#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gainarr/gain_graph.hpp"

namespace gainarr {

/// Undirected simple graph on vertices 0..n-1 (n <= 32), adjacency as bitmasks.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const;
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)] >> v & 1u; }
  std::uint32_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::vector<std::pair<int, int>> edges() const;
  bool is_complete() const;

 private:
  std::vector<std::uint32_t> adj_;
};

/// A gain graph over F_2 seen as a signed graph: gain 0 is positive, 1 negative.
class SignedGraphView {
 public:
  explicit SignedGraphView(GainGraph g);

  const GainGraph& graph() const { return g_; }
  /// Positive and negative edges as simple graphs on vertex positions.
  const SimpleGraph& positive() const { return pos_; }
  const SimpleGraph& negative() const { return neg_; }

 private:
  GainGraph g_;
  SimpleGraph pos_;
  SimpleGraph neg_;
};

/// Signed graph on 1..n with the given positive and negative edges
/// (0-based pairs).
GainGraph signed_graph(int n, const std::vector<std::pair<int, int>>& positive,
                       const std::vector<std::pair<int, int>>& negative);

/// The four-vertex obstruction: K4 positive except 13, with pairs 12 and 34
/// doubled by a negative edge and 13 negative only.
GainGraph switching_obstruction_graph();

struct SignedOptions {
  std::size_t max_vertices = 10;
};

/// Every balanced cycle of length >= 4 has a chord splitting it into two
/// balanced cycles.
bool is_balanced_chordal(const SignedGraphView& s, const SignedOptions& opts = {});
/// Some vertex subset of size >= 3 induces exactly a cycle (one class per
/// consecutive pair, nothing else) with nonzero gain.
bool has_induced_unbalanced_cycle(const SignedGraphView& s, const SignedOptions& opts = {});
/// Some induced four-vertex subgraph is switching equivalent, up to
/// relabeling, to switching_obstruction_graph().
bool has_switching_obstruction(const SignedGraphView& s);
bool signed_freeness_criterion(const SignedGraphView& s, const SignedOptions& opts = {});

/// No induced 2K2, C4 or P4.
bool is_threshold(const SimpleGraph& g);
/// Peels isolated or dominating vertices until nothing is left.
bool is_threshold_by_elimination(const SimpleGraph& g);
/// Requires the positive graph to be complete; returns is_threshold(negative).
bool edelman_reiner_freeness(const SignedGraphView& s);

}  // namespace gainarr
