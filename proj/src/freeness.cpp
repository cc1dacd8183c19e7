#include "gainarr/freeness.hpp"

#include <algorithm>
#include <unordered_map>

#include "gainarr/error.hpp"
#include "gainarr/memo_cache.hpp"

namespace gainarr {

std::optional<ExponentMultiset> exponents_from_chi(const IntPolynomial& chi, std::size_t ambient) {
  if (!chi.is_monic()) fail(ErrorKind::InvalidArgument, "exponents need a monic polynomial, got " + chi.to_string());
  if (chi.degree() != static_cast<int>(ambient)) {
    fail(ErrorKind::InvalidArgument, "degree " + std::to_string(chi.degree()) + " does not match ambient dimension " +
                                         std::to_string(ambient));
  }
  IntPolynomial rest;
  ExponentMultiset roots = chi.integer_roots(&rest);
  if (rest.degree() != 0) return std::nullopt;
  if (!roots.empty() && roots.front() < 0) return std::nullopt;
  return roots;
}

bool multiset_includes(const ExponentMultiset& big, const ExponentMultiset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

const char* refutation_name(Refutation r) {
  switch (r) {
    case Refutation::None:
      return "none";
    case Refutation::NonIntegerRoots:
      return "non-integer chi roots";
    case Refutation::ExponentNonInclusion:
      return "exponent non-inclusion";
    case Refutation::NonDivisibility:
      return "chi does not divide";
    case Refutation::SubgraphNotFree:
      return "subgraph not free along edges";
    case Refutation::NoAdmissibleEdge:
      return "no admissible edge";
  }
  return "?";
}

const char* mode_name(FreenessMode m) {
  return m == FreenessMode::InductiveAlongEdges ? "if-edges" : "df-edges";
}

namespace {

// Chosen edge index, or -1 when no edge works.
MemoCache<int>& decision_cache() {
  static MemoCache<int> cache;
  return cache;
}

std::size_t ambient_of(const GainGraph& g, ArrangementKind kind) {
  return kind == ArrangementKind::ConeAffinographic ? g.num_vertices() + 1 : g.num_vertices();
}

class Search {
 public:
  Search(ArrangementKind kind, FreenessMode mode, std::size_t cap) : kind_(kind), mode_(mode), cap_(cap) {}

  IntPolynomial chi(const GainGraph& g) const { return chi_gaingraph_recursive(g, kind_); }

  /// Chosen edge index or -1. Edgeless graphs are never passed here.
  int choose(const GainGraph& g, std::vector<EdgeRejection>* rejections, Refutation* why) {
    if (!rejections) {
      if (auto hit = decision_cache().find(key(g))) return *hit;
    }
    if (++nodes_ > cap_) {
      fail(ErrorKind::BoundExceeded, "freeness search exceeded " + std::to_string(cap_) + " nodes");
    }
    int chosen = -1;
    const IntPolynomial c = chi(g);
    // Both notions imply freeness, so chi must split (factorization theorem).
    if (!exponents_from_chi(c, ambient_of(g, kind_))) {
      if (why) *why = Refutation::NonIntegerRoots;
    } else {
      if (why) *why = Refutation::NoAdmissibleEdge;
      const auto& edges = g.edges();
      for (std::size_t k = 0; k < edges.size() && chosen < 0; ++k) {
        Refutation r = try_edge(g, c, edges[k]);
        if (r == Refutation::None) {
          chosen = static_cast<int>(k);
          if (why) *why = Refutation::None;
        } else if (rejections) {
          rejections->push_back({edges[k], r});
        }
      }
    }
    decision_cache().insert(key(g), chosen);
    return chosen;
  }

  bool decide(const GainGraph& g) { return g.num_edges() == 0 || choose(g, nullptr, nullptr) >= 0; }

  Refutation try_edge(const GainGraph& g, const IntPolynomial& c, const EdgeClass& e) {
    const GainGraph con = contract_edge(g, orient(e));
    const IntPolynomial cc = chi(con);
    if (mode_ == FreenessMode::DivisionalAlongEdges) {
      if (!c.divisible_by(cc)) return Refutation::NonDivisibility;
      return decide(con) ? Refutation::None : Refutation::SubgraphNotFree;
    }
    const GainGraph del = delete_edge(g, e);
    auto ed = exponents_from_chi(chi(del), ambient_of(del, kind_));
    auto ec = exponents_from_chi(cc, ambient_of(con, kind_));
    if (!ed || !ec) return Refutation::NonIntegerRoots;
    if (!multiset_includes(*ed, *ec)) return Refutation::ExponentNonInclusion;
    return decide(con) && decide(del) ? Refutation::None : Refutation::SubgraphNotFree;
  }

  std::size_t build_witness(const GainGraph& g, std::vector<WitnessStep>& out,
                            std::unordered_map<std::string, std::size_t>& seen) {
    std::string k = canonical_key(g);
    if (auto it = seen.find(k); it != seen.end()) return it->second;
    const std::size_t at = out.size();
    seen.emplace(std::move(k), at);
    out.push_back({g, std::nullopt, chi(g).to_factored_string(), "", "", std::nullopt, std::nullopt});
    if (g.num_edges() == 0) return at;
    const int idx = choose(g, nullptr, nullptr);
    if (idx < 0) fail(ErrorKind::Verification, "witness requested for a graph that is not free along edges");
    const EdgeClass e = g.edges()[static_cast<std::size_t>(idx)];
    const GainGraph con = contract_edge(g, orient(e));
    out[at].edge = e;
    out[at].chi_contraction = chi(con).to_factored_string();
    const std::size_t ci = build_witness(con, out, seen);
    out[at].contraction = ci;
    if (mode_ == FreenessMode::InductiveAlongEdges) {
      const GainGraph del = delete_edge(g, e);
      out[at].chi_deletion = chi(del).to_factored_string();
      const std::size_t di = build_witness(del, out, seen);
      out[at].deletion = di;
    }
    return at;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  std::string key(const GainGraph& g) const {
    std::string k = shape_key(g);
    k.push_back(static_cast<char>('0' + static_cast<int>(kind_)));
    k.push_back(mode_ == FreenessMode::InductiveAlongEdges ? 'I' : 'D');
    return k;
  }

  ArrangementKind kind_;
  FreenessMode mode_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
};

}  // namespace

FreenessCertificate decide_along_edges(const GainGraph& g, ArrangementKind kind, FreenessMode mode,
                                       const FreenessOptions& opts) {
  if (kind == ArrangementKind::Affinographic) {
    fail(ErrorKind::InvalidArgument, "freeness along edges is defined for the cone or the bias arrangement");
  }
  Search s(kind, mode, opts.node_cap);
  FreenessCertificate cert;
  cert.kind = kind;
  cert.mode = mode;
  const IntPolynomial chi = s.chi(g);
  cert.chi = chi.to_factored_string();
  cert.exponents = exponents_from_chi(chi, ambient_of(g, kind));
  if (g.num_edges() == 0) {
    cert.verdict = true;
  } else {
    cert.verdict = s.choose(g, &cert.rejections, &cert.reason) >= 0;
    if (cert.verdict) cert.rejections.clear();
  }
  if (cert.verdict && opts.witness) {
    std::unordered_map<std::string, std::size_t> seen;
    s.build_witness(g, cert.witness, seen);
  }
  cert.nodes = s.nodes();
  return cert;
}

bool free_along_edges(const GainGraph& g, ArrangementKind kind, FreenessMode mode, std::size_t node_cap) {
  if (kind == ArrangementKind::Affinographic) {
    fail(ErrorKind::InvalidArgument, "freeness along edges is defined for the cone or the bias arrangement");
  }
  return Search(kind, mode, node_cap).decide(g);
}

FreenessCertificate if_along_edges(const GainGraph& g, ArrangementKind kind, const FreenessOptions& opts) {
  return decide_along_edges(g, kind, FreenessMode::InductiveAlongEdges, opts);
}

FreenessCertificate df_along_edges(const GainGraph& g, ArrangementKind kind, const FreenessOptions& opts) {
  return decide_along_edges(g, kind, FreenessMode::DivisionalAlongEdges, opts);
}

bool replay_witness(const FreenessCertificate& c) {
  if (!c.verdict || c.witness.empty()) return false;
  auto chi = [&](const GainGraph& g) { return chi_gaingraph_recursive(g, c.kind); };
  auto exps = [&](const GainGraph& g) { return exponents_from_chi(chi(g), ambient_of(g, c.kind)); };
  const bool inductive = c.mode == FreenessMode::InductiveAlongEdges;
  // Children are compared by value and have fewer edges, so the checks
  // below cannot go around in a circle.
  for (const WitnessStep& s : c.witness) {
    if (chi(s.graph).to_factored_string() != s.chi) return false;
    if (s.graph.num_edges() == 0) {
      if (s.edge || s.contraction || s.deletion) return false;
      continue;
    }
    if (!s.edge || !s.graph.has_edge(*s.edge) || !s.contraction) return false;
    if (*s.contraction >= c.witness.size()) return false;
    const GainGraph con = contract_edge(s.graph, orient(*s.edge));
    if (!(c.witness[*s.contraction].graph == con)) return false;
    if (chi(con).to_factored_string() != s.chi_contraction) return false;
    if (inductive) {
      if (!s.deletion || *s.deletion >= c.witness.size()) return false;
      const GainGraph del = delete_edge(s.graph, *s.edge);
      if (!(c.witness[*s.deletion].graph == del)) return false;
      if (chi(del).to_factored_string() != s.chi_deletion) return false;
      auto ed = exps(del);
      auto ec = exps(con);
      if (!ed || !ec || !multiset_includes(*ed, *ec)) return false;
    } else {
      if (s.deletion || !chi(s.graph).divisible_by(chi(con))) return false;
    }
  }
  return true;
}

void clear_freeness_cache() { decision_cache().clear(); }

}  // namespace gainarr
