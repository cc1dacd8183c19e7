#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gainarr {

using Vertex = int;
using Gain = std::int64_t;

/// Gain group: the integers (p == 0) or Z/pZ for a prime p.
struct GainGroup {
  std::uint32_t p = 0;

  static GainGroup integers() { return {0}; }
  static GainGroup mod(std::uint32_t p);

  bool is_integers() const { return p == 0; }
  bool is_signed() const { return p == 2; }
  Gain reduce(Gain g) const;
  Gain negate(Gain g) const { return reduce(-g); }
  std::string name() const;

  friend bool operator==(const GainGroup&, const GainGroup&) = default;
};

/// Edge class [i,j,g] in canonical orientation i < j.
struct EdgeClass {
  Vertex i = 0;
  Vertex j = 0;
  Gain g = 0;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
  friend auto operator<=>(const EdgeClass&, const EdgeClass&) = default;
};

/// An orientation (tail, head, gain) of an edge class.
struct DirectedEdge {
  Vertex tail = 0;
  Vertex head = 0;
  Gain g = 0;

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

EdgeClass normalize_edge(Vertex i, Vertex j, Gain g, GainGroup group = GainGroup::integers());
DirectedEdge orient(const EdgeClass& e);

/// Closed walk v0 v1 ... v_{k-1} v0 with one chosen edge class per step.
/// `gain` is the sum of gains in the traversal direction.
struct CycleWithGain {
  std::vector<Vertex> vertices;
  std::vector<EdgeClass> edges;  // edges[k] joins vertices[k] and vertices[k+1 mod len]
  Gain gain = 0;
  GainGroup group;

  std::size_t length() const { return vertices.size(); }
};

bool is_balanced(const CycleWithGain& c);

/// Simple gain graph. Immutable in spirit: the mutating helpers are used
/// only while building; every graph operation returns a new graph.
class GainGraph {
 public:
  GainGraph() = default;
  GainGraph(GainGroup group, std::vector<Vertex> vertices);
  /// Vertices 1..n.
  static GainGraph with_vertices(GainGroup group, int n);

  const GainGroup& group() const { return group_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<EdgeClass>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool has_vertex(Vertex v) const;
  bool has_edge(const EdgeClass& e) const;
  /// Position of v in the vertex order.
  std::size_t index_of(Vertex v) const;

  /// Adds the class of (i, j, g); duplicates are ignored. Returns *this.
  GainGraph& add_edge(Vertex i, Vertex j, Gain g);

  /// Edge classes joining u and v, with gains read in the direction u -> v.
  std::vector<Gain> gains_between(Vertex u, Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const GainGraph&, const GainGraph&) = default;

 private:
  GainGroup group_;
  std::vector<Vertex> vertices_;  // sorted
  std::vector<EdgeClass> edges_;  // sorted, unique
};

GainGraph delete_edge(const GainGraph& g, const EdgeClass& e);
/// Identifies d.tail with d.head: the tail disappears, edges [k,tail,h]
/// become [k,head,h+g], other tail-head classes and loops are dropped.
GainGraph contract_edge(const GainGraph& g, const DirectedEdge& d);
GainGraph switch_vertex(const GainGraph& g, Vertex v);
GainGraph induced_subgraph(const GainGraph& g, const std::vector<Vertex>& subset);

struct CycleOptions {
  bool include_digons = false;
  std::size_t max_vertices = 10;
};

/// Every cycle once: it starts at its minimum vertex and its second vertex
/// is smaller than its last. Digons (two parallel classes) come first when
/// enabled. Cycles of length >= 3 pick one class per consecutive pair.
std::vector<CycleWithGain> enumerate_cycles(const GainGraph& g, const CycleOptions& opts = {});

/// Byte string identifying the labeled graph; equal iff the graphs are equal.
std::string canonical_key(const GainGraph& g);
/// Like canonical_key, but vertices are replaced by their positions, so
/// graphs differing by an order-preserving relabeling share a key.
std::string shape_key(const GainGraph& g);

}  // namespace gainarr
