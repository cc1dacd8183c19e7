#include "gainarr/gain_graph.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

#include "gainarr/error.hpp"
#include "gainarr/scalar.hpp"

namespace gainarr {

GainGroup GainGroup::mod(std::uint32_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "gain group modulus must be prime, got " + std::to_string(p));
  return {p};
}

Gain GainGroup::reduce(Gain g) const {
  if (p == 0) return g;
  Gain r = g % static_cast<Gain>(p);
  return r < 0 ? r + p : r;
}

std::string GainGroup::name() const { return p == 0 ? "Z" : "F" + std::to_string(p); }

EdgeClass normalize_edge(Vertex i, Vertex j, Gain g, GainGroup group) {
  if (i == j) fail(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(i));
  if (i < j) return {i, j, group.reduce(g)};
  return {j, i, group.negate(g)};
}

DirectedEdge orient(const EdgeClass& e) { return {e.i, e.j, e.g}; }

bool is_balanced(const CycleWithGain& c) { return c.group.reduce(c.gain) == 0; }

GainGraph::GainGraph(GainGroup group, std::vector<Vertex> vertices) : group_(group), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    fail(ErrorKind::InvalidArgument, "repeated vertex label");
  }
}

GainGraph GainGraph::with_vertices(GainGroup group, int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = k + 1;
  return GainGraph(group, std::move(v));
}

bool GainGraph::has_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool GainGraph::has_edge(const EdgeClass& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::size_t GainGraph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) fail(ErrorKind::InvalidArgument, "unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

GainGraph& GainGraph::add_edge(Vertex i, Vertex j, Gain g) {
  if (!has_vertex(i) || !has_vertex(j)) {
    fail(ErrorKind::InvalidArgument, "edge endpoint outside the vertex set");
  }
  EdgeClass e = normalize_edge(i, j, g, group_);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
  return *this;
}

std::vector<Gain> GainGraph::gains_between(Vertex u, Vertex v) const {
  std::vector<Gain> out;
  Vertex a = std::min(u, v), b = std::max(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), EdgeClass{a, b, INT64_MIN});
  for (; it != edges_.end() && it->i == a && it->j == b; ++it) out.push_back(u < v ? it->g : group_.negate(it->g));
  return out;
}

std::string GainGraph::to_string() const {
  std::string out = "group " + (group_.is_integers() ? std::string("Z") : "F " + std::to_string(group_.p)) + "\n";
  out += "vertices " + std::to_string(vertices_.size()) + "\n";
  for (const auto& e : edges_) {
    out += "edge " + std::to_string(e.i) + " " + std::to_string(e.j) + " " + std::to_string(e.g) + "\n";
  }
  return out;
}

GainGraph delete_edge(const GainGraph& g, const EdgeClass& e) {
  if (!g.has_edge(e)) fail(ErrorKind::InvalidArgument, "edge not in graph");
  GainGraph out(g.group(), g.vertices());
  for (const auto& f : g.edges()) {
    if (f != e) out.add_edge(f.i, f.j, f.g);
  }
  return out;
}

GainGraph contract_edge(const GainGraph& g, const DirectedEdge& d) {
  const Vertex i = d.tail, j = d.head;
  if (!g.has_edge(normalize_edge(i, j, d.g, g.group()))) fail(ErrorKind::InvalidArgument, "edge not in graph");
  std::vector<Vertex> rest;
  for (Vertex v : g.vertices()) {
    if (v != i) rest.push_back(v);
  }
  GainGraph out(g.group(), std::move(rest));
  for (const auto& e : g.edges()) {
    if (e.i != i && e.j != i) {
      out.add_edge(e.i, e.j, e.g);
      continue;
    }
    // Read the edge as [k, i, h].
    Vertex k = e.i == i ? e.j : e.i;
    Gain h = e.j == i ? e.g : g.group().negate(e.g);
    if (k == j) continue;
    out.add_edge(k, j, g.group().reduce(h + d.g));
  }
  return out;
}

GainGraph switch_vertex(const GainGraph& g, Vertex v) {
  if (!g.group().is_signed()) fail(ErrorKind::InvalidArgument, "switching needs gain group F2");
  if (!g.has_vertex(v)) fail(ErrorKind::InvalidArgument, "unknown vertex " + std::to_string(v));
  GainGraph out(g.group(), g.vertices());
  for (const auto& e : g.edges()) out.add_edge(e.i, e.j, (e.i == v || e.j == v) ? 1 - e.g : e.g);
  return out;
}

GainGraph induced_subgraph(const GainGraph& g, const std::vector<Vertex>& subset) {
  for (Vertex v : subset) {
    if (!g.has_vertex(v)) fail(ErrorKind::InvalidArgument, "subset is not inside the vertex set");
  }
  GainGraph out(g.group(), subset);
  for (const auto& e : g.edges()) {
    if (out.has_vertex(e.i) && out.has_vertex(e.j)) out.add_edge(e.i, e.j, e.g);
  }
  return out;
}

std::vector<CycleWithGain> enumerate_cycles(const GainGraph& g, const CycleOptions& opts) {
  if (g.num_vertices() > opts.max_vertices) {
    fail(ErrorKind::BoundExceeded, "cycle enumeration limited to " + std::to_string(opts.max_vertices) + " vertices");
  }
  const GainGroup grp = g.group();
  std::vector<CycleWithGain> out;
  const auto& edges = g.edges();

  if (opts.include_digons) {
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size() && edges[b].i == edges[a].i && edges[b].j == edges[a].j; ++b) {
        // i -> j along a, back along b.
        out.push_back({{edges[a].i, edges[a].j}, {edges[a], edges[b]}, grp.reduce(edges[a].g - edges[b].g), grp});
      }
    }
  }

  // Adjacency over the underlying simple graph.
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : edges) adj[g.index_of(e.i)][g.index_of(e.j)] = adj[g.index_of(e.j)][g.index_of(e.i)] = true;

  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  // Expands a vertex path into one cycle per choice of edge classes.
  auto emit = [&](const std::vector<std::size_t>& p) {
    std::size_t len = p.size();
    std::vector<std::vector<Gain>> choices(len);
    for (std::size_t k = 0; k < len; ++k) choices[k] = g.gains_between(vs[p[k]], vs[p[(k + 1) % len]]);
    std::vector<std::size_t> pick(len, 0);
    while (true) {
      CycleWithGain c;
      c.group = grp;
      Gain total = 0;
      for (std::size_t k = 0; k < len; ++k) {
        Vertex u = vs[p[k]], w = vs[p[(k + 1) % len]];
        Gain h = choices[k][pick[k]];
        c.vertices.push_back(u);
        c.edges.push_back(normalize_edge(u, w, h, grp));
        total = grp.reduce(total + h);
      }
      c.gain = total;
      out.push_back(std::move(c));
      std::size_t k = 0;
      while (k < len && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == len) break;
    }
  };
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    std::size_t last = path.back();
    if (path.size() >= 3 && adj[last][start] && path[1] < last) emit(path);
    for (std::size_t nxt = start + 1; nxt < n; ++nxt) {
      if (used[nxt] || !adj[last][nxt]) continue;
      used[nxt] = true;
      path.push_back(nxt);
      extend(start);
      path.pop_back();
      used[nxt] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    used[s] = true;
    extend(s);
    used[s] = false;
  }
  return out;
}

std::string canonical_key(const GainGraph& g) {
  std::string key;
  auto put = [&](std::int64_t v) {
    char buf[sizeof v];
    std::memcpy(buf, &v, sizeof v);
    key.append(buf, sizeof v);
  };
  key.reserve(16 + 8 * g.num_vertices() + 24 * g.num_edges());
  put(g.group().p);
  put(static_cast<std::int64_t>(g.num_vertices()));
  for (Vertex v : g.vertices()) put(v);
  for (const auto& e : g.edges()) {
    put((static_cast<std::int64_t>(e.i) << 32) | static_cast<std::uint32_t>(e.j));
    put(e.g);
  }
  return key;
}

std::string shape_key(const GainGraph& g) {
  std::string key;
  key.reserve(8 + 10 * g.num_edges());
  const std::uint32_t p = g.group().p;
  key.append(reinterpret_cast<const char*>(&p), sizeof p);
  key.push_back(static_cast<char>(g.num_vertices()));
  for (const auto& e : g.edges()) {
    key.push_back(static_cast<char>(g.index_of(e.i)));
    key.push_back(static_cast<char>(g.index_of(e.j)));
    key.append(reinterpret_cast<const char*>(&e.g), sizeof e.g);
  }
  return key;
}

}  // namespace gainarr
