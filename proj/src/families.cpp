#include "gainarr/families.hpp"

#include <algorithm>
#include <set>

#include "gainarr/error.hpp"

namespace gainarr {

const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Coxeter:
      return "coxeter";
    case FamilyKind::Boolean:
      return "boolean";
    case FamilyKind::Catalan:
      return "catalan";
    case FamilyKind::Shi:
      return "shi";
    case FamilyKind::Dms:
      return "dms";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (auto k : {FamilyKind::Coxeter, FamilyKind::Boolean, FamilyKind::Catalan, FamilyKind::Shi, FamilyKind::Dms}) {
    if (name == family_name(k)) return k;
  }
  fail(ErrorKind::InvalidArgument, "unknown family '" + name + "'");
}

ArrangementKind family_arrangement(FamilyKind k) {
  return k == FamilyKind::Dms || k == FamilyKind::Boolean ? ArrangementKind::Bias : ArrangementKind::Affinographic;
}

GainGraph make_family(FamilyKind kind, int l, int m) {
  if (l < 2) fail(ErrorKind::InvalidArgument, "families need l >= 2");
  if (m < 0) fail(ErrorKind::InvalidArgument, "families need m >= 0");
  if (kind == FamilyKind::Shi && m < 1) fail(ErrorKind::InvalidArgument, "shi needs m >= 1");
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), l);
  int lo = 0, hi = -1;
  switch (kind) {
    case FamilyKind::Boolean:
      break;
    case FamilyKind::Coxeter:
      lo = hi = 0;
      break;
    case FamilyKind::Catalan:
    case FamilyKind::Dms:
      lo = -m;
      hi = m;
      break;
    case FamilyKind::Shi:
      lo = 1 - m;
      hi = m;
      break;
  }
  for (int i = 1; i <= l; ++i) {
    for (int j = i + 1; j <= l; ++j) {
      for (int h = lo; h <= hi; ++h) g.add_edge(i, j, h);
    }
  }
  return g;
}

void Digraph::validate() const {
  if (l < 0) fail(ErrorKind::InvalidArgument, "negative vertex count");
  for (auto [i, j] : arcs) {
    if (i < 1 || j > l || i >= j) fail(ErrorKind::InvalidArgument, "arcs must be (i, j) with 1 <= i < j <= l");
  }
}

GainGraph digraph_to_gaingraph(const Digraph& d) {
  d.validate();
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), d.l);
  for (int i = 1; i <= d.l; ++i) {
    for (int j = i + 1; j <= d.l; ++j) g.add_edge(i, j, 0);
  }
  for (auto [i, j] : d.arcs) g.add_edge(i, j, 1);
  return g;
}

bool ab_free_criterion(const Digraph& d) {
  d.validate();
  const std::set<std::pair<int, int>> arcs(d.arcs.begin(), d.arcs.end());
  auto joined = [&](int a, int b) { return arcs.count({std::min(a, b), std::max(a, b)}) > 0; };
  for (auto [a, b] : arcs) {
    for (auto [c, e] : arcs) {
      // a -> b -> e with no arc between a and e.
      if (c == b && !joined(a, e)) return false;
      // Two arcs on four distinct vertices with nothing else among them.
      const std::set<int> four{a, b, c, e};
      if (four.size() == 4 && !joined(a, c) && !joined(a, e) && !joined(b, c) && !joined(b, e)) return false;
    }
  }
  return true;
}

bool ab_supersolvable_criterion(const Digraph& d) {
  d.validate();
  if (d.arcs.empty()) return true;
  const auto same = [&](auto pick) {
    return std::all_of(d.arcs.begin(), d.arcs.end(), [&](const auto& a) { return pick(a) == pick(d.arcs.front()); });
  };
  return same([](const auto& a) { return a.first; }) || same([](const auto& a) { return a.second; });
}

BigInt raney(int l, int s, int r) {
  const long n = static_cast<long>(l) * s + r;
  if (l < 0 || s < 0 || r < 0) fail(ErrorKind::InvalidArgument, "Raney numbers need nonnegative parameters");
  if (n == 0) fail(ErrorKind::InvalidArgument, "Raney numbers need l s + r > 0");
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(l));
  BigInt num = b * r;
  if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(n))) {
    fail(ErrorKind::InvalidArgument, "Raney number is not an integer for these parameters");
  }
  return num / n;
}

GainGraph example_gain_graph() {
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), 3);
  g.add_edge(1, 2, 0).add_edge(1, 3, 0).add_edge(1, 2, 1).add_edge(2, 3, 1).add_edge(2, 3, -1).add_edge(1, 3, 2);
  return g;
}

GainGraph free_not_kpi1_graph() {
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) g.add_edge(i, j, 0).add_edge(i, j, 1);
  }
  return g;
}

GainGraph unbalanced_triangle() {
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), 3);
  g.add_edge(1, 2, 0).add_edge(2, 3, 0).add_edge(1, 3, 1);
  return g;
}

}  // namespace gainarr
