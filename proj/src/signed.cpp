#include "gainarr/signed.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <numeric>

#include "gainarr/error.hpp"

namespace gainarr {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0 || n > 32) fail(ErrorKind::InvalidArgument, "simple graphs are limited to 32 vertices");
  adj_.assign(static_cast<std::size_t>(n), 0);
}

std::size_t SimpleGraph::num_edges() const {
  std::size_t twice = 0;
  for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    fail(ErrorKind::InvalidArgument, "bad simple-graph edge");
  }
  adj_[static_cast<std::size_t>(u)] |= 1u << v;
  adj_[static_cast<std::size_t>(v)] |= 1u << u;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v = u + 1; v < num_vertices(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_complete() const {
  const std::size_t n = adj_.size();
  return n == 0 || num_edges() * 2 == n * (n - 1);
}

SignedGraphView::SignedGraphView(GainGraph g)
    : g_(std::move(g)), pos_(static_cast<int>(g_.num_vertices())), neg_(static_cast<int>(g_.num_vertices())) {
  if (!g_.group().is_signed()) fail(ErrorKind::Precondition, "signed graph view needs gains in F_2");
  for (const auto& e : g_.edges()) {
    const int u = static_cast<int>(g_.index_of(e.i));
    const int v = static_cast<int>(g_.index_of(e.j));
    (e.g == 0 ? pos_ : neg_).add_edge(u, v);
  }
}

GainGraph signed_graph(int n, const std::vector<std::pair<int, int>>& positive,
                       const std::vector<std::pair<int, int>>& negative) {
  GainGraph g = GainGraph::with_vertices(GainGroup::mod(2), n);
  for (auto [u, v] : positive) g.add_edge(u + 1, v + 1, 0);
  for (auto [u, v] : negative) g.add_edge(u + 1, v + 1, 1);
  return g;
}

GainGraph switching_obstruction_graph() {
  return signed_graph(4, {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {2, 3}}, {{0, 2}, {0, 1}, {2, 3}});
}

namespace {

void check_bound(const SignedGraphView& s, const SignedOptions& opts) {
  if (s.graph().num_vertices() > opts.max_vertices) {
    fail(ErrorKind::BoundExceeded, "signed predicates limited to " + std::to_string(opts.max_vertices) + " vertices");
  }
}

// Gain of e read from u to the other endpoint.
Gain directed_gain(const EdgeClass& e, Vertex u, const GainGroup& grp) { return e.i == u ? e.g : grp.negate(e.g); }

}  // namespace

bool is_balanced_chordal(const SignedGraphView& s, const SignedOptions& opts) {
  check_bound(s, opts);
  const GainGraph& g = s.graph();
  const GainGroup& grp = g.group();
  for (const auto& c : enumerate_cycles(g, {false, opts.max_vertices})) {
    const std::size_t len = c.length();
    if (len < 4 || !is_balanced(c)) continue;
    // prefix[k] = gain of the walk v0 -> v_k along the cycle.
    std::vector<Gain> prefix(len, 0);
    for (std::size_t k = 1; k < len; ++k) {
      prefix[k] = grp.reduce(prefix[k - 1] + directed_gain(c.edges[k - 1], c.vertices[k - 1], grp));
    }
    bool split = false;
    for (std::size_t a = 0; a < len && !split; ++a) {
      for (std::size_t b = a + 2; b < len && !split; ++b) {
        if (a == 0 && b == len - 1) continue;
        const Gain path = grp.reduce(prefix[b] - prefix[a]);
        // The arc a..b closed by a chord read a -> b is balanced iff the
        // chord carries the path gain; the complementary cycle then is too.
        for (Gain chord : g.gains_between(c.vertices[a], c.vertices[b])) {
          if (grp.reduce(chord - path) == 0) {
            split = true;
            break;
          }
        }
      }
    }
    if (!split) return false;
  }
  return true;
}

bool has_induced_unbalanced_cycle(const SignedGraphView& s, const SignedOptions& opts) {
  check_bound(s, opts);
  const GainGraph& g = s.graph();
  const GainGroup& grp = g.group();
  const int n = static_cast<int>(g.num_vertices());
  // count[u][v] classes between positions u, v; gain[u][v] read u -> v.
  std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
  std::vector<std::vector<Gain>> gain(n, std::vector<Gain>(n, 0));
  for (const auto& e : g.edges()) {
    const int u = static_cast<int>(g.index_of(e.i));
    const int v = static_cast<int>(g.index_of(e.j));
    ++count[u][v];
    ++count[v][u];
    gain[u][v] = e.g;
    gain[v][u] = grp.negate(e.g);
  }
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    if (std::popcount(sub) < 3) continue;
    bool shape = true;
    for (int u = 0; u < n && shape; ++u) {
      if (!(sub >> u & 1)) continue;
      int nb = 0;
      for (int v = 0; v < n; ++v) {
        if (v == u || !(sub >> v & 1) || count[u][v] == 0) continue;
        if (count[u][v] > 1) shape = false;
        ++nb;
      }
      shape = shape && nb == 2;
    }
    if (!shape) continue;
    // 2-regular: walk from the lowest vertex; a cycle iff it covers sub.
    const int start = std::countr_zero(sub);
    int prev = -1, cur = start, steps = 0;
    Gain total = 0;
    do {
      int next = -1;
      for (int v = 0; v < n; ++v) {
        if (v != cur && v != prev && (sub >> v & 1) && count[cur][v] == 1) {
          next = v;
          break;
        }
      }
      total = grp.reduce(total + gain[cur][next]);
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != start);
    if (steps == std::popcount(sub) && total != 0) return true;
  }
  return false;
}

namespace {

constexpr std::array<std::array<int, 4>, 4> kPairIndex{{{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}}};

// Bit 2*pair + sign for each class of a four-vertex signed graph.
using Code = std::uint32_t;

Code encode(const std::vector<std::array<int, 3>>& classes) {
  Code c = 0;
  for (auto [a, b, sign] : classes) c |= Code{1} << (2 * kPairIndex[a][b] + sign);
  return c;
}

const std::bitset<4096>& obstruction_orbit() {
  static const std::bitset<4096> orbit = [] {
    const GainGraph base = switching_obstruction_graph();
    std::bitset<4096> out;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      for (int sw = 0; sw < 16; ++sw) {
        std::vector<std::array<int, 3>> classes;
        for (const auto& e : base.edges()) {
          const int a = e.i - 1, b = e.j - 1;
          const int sign = static_cast<int>(e.g) ^ (sw >> a & 1) ^ (sw >> b & 1);
          classes.push_back({perm[a], perm[b], sign});
        }
        out.set(encode(classes));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return orbit;
}

}  // namespace

bool has_switching_obstruction(const SignedGraphView& s) {
  const GainGraph& g = s.graph();
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::array<int, 3>> all;
  for (const auto& e : g.edges()) {
    all.push_back({static_cast<int>(g.index_of(e.i)), static_cast<int>(g.index_of(e.j)), static_cast<int>(e.g)});
  }
  const auto& orbit = obstruction_orbit();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const std::array<int, 4> pick{a, b, c, d};
          std::vector<std::array<int, 3>> local;
          for (auto [u, v, sign] : all) {
            auto pu = std::find(pick.begin(), pick.end(), u);
            auto pv = std::find(pick.begin(), pick.end(), v);
            if (pu == pick.end() || pv == pick.end()) continue;
            local.push_back({static_cast<int>(pu - pick.begin()), static_cast<int>(pv - pick.begin()), sign});
          }
          if (orbit.test(encode(local))) return true;
        }
      }
    }
  }
  return false;
}

bool signed_freeness_criterion(const SignedGraphView& s, const SignedOptions& opts) {
  return is_balanced_chordal(s, opts) && !has_induced_unbalanced_cycle(s, opts) && !has_switching_obstruction(s);
}

bool is_threshold(const SimpleGraph& g) {
  const int n = g.num_vertices();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const std::uint32_t sub = 1u << a | 1u << b | 1u << c | 1u << d;
          std::array<int, 4> deg{};
          int k = 0;
          for (int v : {a, b, c, d}) deg[static_cast<std::size_t>(k++)] = std::popcount(g.neighbors(v) & sub);
          std::sort(deg.begin(), deg.end());
          const int edges = std::accumulate(deg.begin(), deg.end(), 0) / 2;
          const bool two_k2 = edges == 2 && deg == std::array<int, 4>{1, 1, 1, 1};
          const bool c4 = edges == 4 && deg == std::array<int, 4>{2, 2, 2, 2};
          const bool p4 = edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2};
          if (two_k2 || c4 || p4) return false;
        }
      }
    }
  }
  return true;
}

bool is_threshold_by_elimination(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::uint32_t alive = n == 32 ? ~0u : (1u << n) - 1;
  while (alive) {
    bool peeled = false;
    for (int v = 0; v < n && !peeled; ++v) {
      if (!(alive >> v & 1)) continue;
      const std::uint32_t nb = g.neighbors(v) & alive;
      if (nb == 0 || nb == (alive & ~(1u << v))) {
        alive &= ~(1u << v);
        peeled = true;
      }
    }
    if (!peeled) return false;
  }
  return true;
}

bool edelman_reiner_freeness(const SignedGraphView& s) {
  if (!s.positive().is_complete()) fail(ErrorKind::Precondition, "the positive graph must be complete");
  return is_threshold(s.negative());
}

}  // namespace gainarr
