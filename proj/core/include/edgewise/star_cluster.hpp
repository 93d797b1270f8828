#pragma once

#include <vector>

#include "edgewise/combinatorics.hpp"
#include "edgewise/complex.hpp"
#include "edgewise/subdivision.hpp"

namespace edgewise {

/// Union of the stars of the vertices of σ. DomainError if σ is not a face.
SimplicialComplex star_cluster(const SimplicialComplex& k, const Simplex& sigma);

/// Φ_j: reverse π and shift every entry by j modulo k (values kept in 1..k).
Word phi(int j, const Word& pi);

/// π̂ in S_{k+1}: Φ_j(π) with k+1 inserted at position j (1-based).
Word insert_top(int j, const Word& pi);

/// S_k ordered by faithful initial part, then lexicographically.
std::vector<Word> init_shelling_order(int k);

/// Facet of Sd(∂Δ^{k-1}) indexed by π, as prefix-subset bitmasks (matches
/// barycentric_boundary).
Simplex sd_facet(const Word& pi);

struct StarClusterLayer {
  int j = 0;
  std::vector<Word> new_permutations;  // shelling order within the layer
  std::vector<Simplex> new_facets;
};

struct StarClusterReport {
  int k = 0;
  int q = 0;
  LatticeVertex base;                  // v = v^{(1)} of F(v, Id)
  std::vector<LatticeVertex> vertices;  // v^{(1)}..v^{(k)}
  std::vector<StarClusterLayer> layers;
  std::vector<Simplex> order;          // concatenated layers
  Count count_enumerated;
  Count count_ie;
  Count count_partition;
  Count x_next;                        // X_{k+1}
  ShellingCertificate certificate;
  CountVec h_types;                    // from the certificate, length k+1
  CountVec h_formula;                  // (1, ..., k) H_k, padded to k+1
  CountVec h_from_f;                   // of the star cluster complex
};

/// Default base vertex v_i = i; requires q >= k+1.
LatticeVertex default_star_cluster_base(int k, int q);

/// Layers of SC(F(v, Id)) from the Φ_j rule: layer j keeps π when
/// init(Φ_j(π)) >= j. Requires 0 < v_1 < ... < v_{k-1} < q-1.
StarClusterReport sc_facets_structured(const Subdivision& t, const LatticeVertex& v);

/// Structured facets plus the layered shelling, its certificate and the
/// three h-vector routes.
StarClusterReport sc_shelling_and_h(const Subdivision& t, const LatticeVertex& v);

/// Inclusion-exclusion over cyclic gaps of index subsets of [k].
Count sc_count_ie(int k);

/// Same count grouped by partitions of k.
Count sc_count_partition(int k);

/// Inclusion-exclusion for the star cluster of a face whose consecutive
/// vertices differ in s_1, s_2, ... coordinates; x_1 = 1, x_{i+1} = x_i + s_i.
Count sc_count_offsets(int k, const std::vector<int>& x);

/// Star cluster size of a face with all vertices interior (DomainError
/// otherwise), by the offset formula.
Count sc_count_general_face(const Subdivision& t, const std::vector<LatticeVertex>& face);

/// Offsets x_i of a face with all vertices interior.
std::vector<int> face_offsets(const Subdivision& t, const std::vector<LatticeVertex>& face);

}  // namespace edgewise
