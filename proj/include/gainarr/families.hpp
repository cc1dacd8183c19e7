#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gainarr/bigint.hpp"
#include "gainarr/charpoly.hpp"
#include "gainarr/gain_graph.hpp"

namespace gainarr {

enum class FamilyKind { Coxeter, Boolean, Catalan, Shi, Dms };

const char* family_name(FamilyKind k);
FamilyKind parse_family_kind(const std::string& name);
/// Dms and Boolean are read through the bias arrangement, the rest through
/// the affinographic one.
ArrangementKind family_arrangement(FamilyKind k);

/// Integer-gain graph on 1..l. catalan: every [i,j,g], |g| <= m; shi:
/// catalan(m - 1) plus every [i,j,m]; coxeter: catalan(0); boolean: no
/// edges; dms: catalan(m).
GainGraph make_family(FamilyKind kind, int l, int m = 0);

/// Acyclic digraph on 1..l with arcs (i, j), i < j.
struct Digraph {
  int l = 0;
  std::vector<std::pair<int, int>> arcs;

  void validate() const;
};

/// Every [i,j,0] plus [i,j,1] for each arc.
GainGraph digraph_to_gaingraph(const Digraph& d);
/// No induced directed 2-path and no induced pair of disjoint arcs.
bool ab_free_criterion(const Digraph& d);
/// All arcs share their tail, or all share their head.
bool ab_supersolvable_criterion(const Digraph& d);

/// r / (l s + r) * binom(l s + r, l). Throws when l s + r = 0 or the value
/// is not an integer.
BigInt raney(int l, int s, int r);

/// Three vertices, edges [1,2,0], [1,3,0], [1,2,1], [2,3,1], [2,3,-1], [1,3,2].
GainGraph example_gain_graph();
/// Three vertices, every [i,j,0] and [i,j,1]: a free bias arrangement that
/// is not K(pi,1).
GainGraph free_not_kpi1_graph();
/// [1,2,0], [2,3,0], [1,3,1] over the integers.
GainGraph unbalanced_triangle();

}  // namespace gainarr
