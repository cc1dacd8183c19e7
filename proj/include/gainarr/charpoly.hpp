#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gainarr/arrangement.hpp"
#include "gainarr/gain_graph.hpp"
#include "gainarr/int_polynomial.hpp"

namespace gainarr {

enum class ArrangementKind { Affinographic, ConeAffinographic, Bias };

const char* kind_name(ArrangementKind k);
Arrangement build_arrangement(const GainGraph& g, ArrangementKind kind);

/// A flat, identified by its closure: bit k of `mask` is set iff hyperplane
/// k contains the flat.
struct Flat {
  std::uint64_t mask = 0;
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::int64_t mu = 0;

  std::vector<std::size_t> hyperplanes() const;
};

/// Flats by increasing rank, the ambient space first.
struct IntersectionPoset {
  std::size_t ambient_dim = 0;
  std::vector<Flat> flats;
};

struct PosetOptions {
  std::size_t max_hyperplanes = 24;
  std::size_t max_flats = 1u << 20;
};

IntersectionPoset intersection_poset(const Arrangement& a, const PosetOptions& opts = {});
IntPolynomial chi_from_poset(const IntersectionPoset& p);
IntPolynomial chi_poset(const Arrangement& a, const PosetOptions& opts = {});

/// chi by deletion-contraction on the graph: chi(G) = chi(G\e) - chi(G/e)
/// with e the smallest edge class, contracted as (i,j,g), i < j. Memoized.
IntPolynomial chi_gaingraph_recursive(const GainGraph& g, ArrangementKind kind);
void clear_chi_cache();
std::size_t chi_cache_size();

struct FiniteFieldOptions {
  std::size_t max_vertices = 5;
  std::size_t control_primes = 2;
};

/// chi(A(G)) by counting points of F_p^l off the hyperplanes for l+1 primes
/// and interpolating; extra primes must agree. Integer gains only.
IntPolynomial chi_finite_field_oracle(const GainGraph& g, const FiniteFieldOptions& opts = {});
/// Number of points of F_p^l avoiding A(G) mod p.
std::int64_t count_points_mod_p(const GainGraph& g, std::uint32_t p);

/// (-1)^l chi(-1), l the ambient dimension.
std::int64_t region_count(const IntPolynomial& chi, std::size_t ambient_dim);

}  // namespace gainarr
