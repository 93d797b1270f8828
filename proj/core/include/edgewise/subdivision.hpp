#pragma once

#include <map>
#include <vector>

#include "edgewise/combinatorics.hpp"
#include "edgewise/complex.hpp"

namespace edgewise {

/// Point of W_{k,q}: weakly increasing, entries in [0, q], length k-1.
using LatticeVertex = std::vector<int>;

/// Facet name: an element of {0, ..., q-1}^{k-1}.
using FacetCode = std::vector<int>;

inline constexpr std::size_t kDefaultMaxFacets = 1'000'000;

/// (α_0; α_1, ..., α_{s-1}; α_s): leading zeros, runs of equal interior
/// values, trailing q's.
struct VertexType {
  int leading_zeros = 0;
  std::vector<int> runs;
  int trailing_q = 0;
  bool operator==(const VertexType&) const = default;
};

struct VertexLink {
  VertexType type;
  Partition lambda;
  SimplicialComplex star;
  SimplicialComplex link;
  SimplicialComplex model;  // K_λ(v)
  bool verified = false;    // link ≅ model was checked and holds
};

/// The edgewise subdivision T_{k,q} of the (k-1)-simplex.
///
/// Vertex ids are the lexicographic ranks of the points of W_{k,q}, so they
/// agree with the order of `vertex_set()`.
class Subdivision {
 public:
  Subdivision(int k, int q);

  int k() const { return k_; }
  int q() const { return q_; }

  Count vertex_count() const;  // C(q+k-1, k-1)
  Count facet_count() const;   // q^{k-1}

  bool contains(const LatticeVertex& v) const;
  bool is_code(const FacetCode& a) const;
  bool is_interior(const LatticeVertex& v) const;  // 0 < v_1 < ... < v_{k-1} < q

  VertexId id(const LatticeVertex& v) const;
  LatticeVertex vertex(VertexId id) const;

  std::vector<LatticeVertex> vertex_set(std::size_t max_vertices = kDefaultMaxFacets) const;
  std::vector<FacetCode> codes(std::size_t max_facets = kDefaultMaxFacets) const;  // lexicographic

  /// v^{(1)}, ..., v^{(k)} of F(a), ordered by coordinate sum.
  std::vector<LatticeVertex> decode(const FacetCode& a) const;
  Simplex facet(const FacetCode& a) const;

  /// Code of F(v, π) for π a permutation of [k-1] consistent with v.
  FacetCode encode(const LatticeVertex& v, const Word& pi) const;

  /// Code of a facet given by vertex ids.
  FacetCode code_of(const Simplex& facet) const;

  SimplicialComplex build(std::size_t max_facets = kDefaultMaxFacets) const;

  /// Keyed by the 1-based position d of the dropped vertex v^{(d)}; only
  /// interior ridges appear.
  std::map<int, FacetCode> ridge_neighbors(const FacetCode& a) const;

  /// Adjacency by coordinate differences in {0,1}^{k-1} or {-1,0}^{k-1}.
  bool is_edge(const LatticeVertex& x, const LatticeVertex& y) const;

  VertexType vertex_type(const LatticeVertex& v) const;
  Partition vertex_partition(const LatticeVertex& v) const;

  /// Permutations of [k] indexing the facets around v, lexicographic.
  std::vector<Word> star_permutations(const LatticeVertex& v) const;

  /// a_π for π in star_permutations(v).
  FacetCode star_code(const LatticeVertex& v, const Word& pi) const;

  /// Built locally from the star permutations; no global complex needed.
  SimplicialComplex star_of_vertex(const LatticeVertex& v) const;

  /// Link of v with its K_λ(v) model. With `verify`, an isomorphism check
  /// is run (subject to `iso_bound`).
  VertexLink link_of_vertex(const LatticeVertex& v, bool verify = true,
                            std::size_t iso_bound = kDefaultIsomorphismBound) const;

  Simplex simplex_of(const std::vector<LatticeVertex>& face) const;

 private:
  void check_vertex(const LatticeVertex& v) const;
  void check_code(const FacetCode& a) const;
  std::uint64_t sequences(int length, int low) const;  // weakly increasing in [low, q]

  int k_;
  int q_;
  std::vector<std::vector<std::uint64_t>> binom_;  // empty when ranks overflow
};

}  // namespace edgewise
