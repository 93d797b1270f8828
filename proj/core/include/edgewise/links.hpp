#pragma once

#include <vector>

#include "edgewise/combinatorics.hpp"
#include "edgewise/complex.hpp"
#include "edgewise/poset.hpp"
#include "edgewise/subdivision.hpp"

namespace edgewise {

/// Combinatorial type of the link of a face: λ lists the sizes of the
/// index sets S_1..S_t in decreasing order, and sigma[i] is the partition
/// of λ_i attached to that index set.
struct LinkDescriptor {
  Partition lambda;
  std::vector<Partition> sigma;
  bool operator==(const LinkDescriptor&) const = default;
  auto operator<=>(const LinkDescriptor&) const = default;
};

struct FaceLink {
  std::vector<LatticeVertex> ordered_face;  // by coordinate sum
  std::vector<std::vector<int>> index_sets;  // S_1..S_t, 1-based, S_t contains k
  std::vector<Partition> sigma;              // per index set, same order
  LinkDescriptor descriptor;
  GradedPoset poset;           // P_F: the chain products stacked, last top dropped
  SimplicialComplex link;      // computed from the star of the lowest vertex
  SimplicialComplex model;     // join of the reduced order complexes
  bool verified = false;       // link ≅ model and star ≅ Δ(P_F)
};

/// Link of a face of T_{k,q} together with its chain-product model. The face
/// is given as a set of lattice points in any order. DomainError if they
/// do not span a face.
FaceLink link_of_face(const Subdivision& t, const std::vector<LatticeVertex>& face, bool verify = true,
                      std::size_t iso_bound = kDefaultIsomorphismBound);

LinkDescriptor classify_link_of_face(const Subdivision& t, const std::vector<LatticeVertex>& face);

/// Join of the reduced order complexes of the σ_i chain products.
SimplicialComplex link_model(const LinkDescriptor& d);

// ---------------------------------------------------------------------------
// Counting

/// Number of (s-1)-faces of the big simplex whose interior vertices have
/// link K_β, β a partition of k into s parts: k (s-1)! / Π m_j! when s <= q.
Count count_faces_with_link_type(int k, int q, const Partition& beta);

/// Number of distinct vertex links in T_{k,q}.
Count count_link_types(int k, int q);

/// Q_s: distinct s-dimensional joins of join-irreducible K_σ's.
Count q_sequence(int s);

/// Distinct links of m-dimensional faces in T_{2m+2,2m+2}: 1 + Σ_{j<=m} Q_j.
Count count_distinct_links_dim(int m);

/// Q^{s,t}_{k,q} with the part-count and q restrictions.
Count q_restricted(int k, int q, int s, int t);

/// Distinct links of (t-1)-faces of T_{k,q}: 1 + Σ_{s=0}^{k-t-1} Q^{s,t}_{k,q}.
Count count_link_types_of_faces(int k, int q, int t);

}  // namespace edgewise
