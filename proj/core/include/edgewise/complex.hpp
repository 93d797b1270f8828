#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "edgewise/common.hpp"

namespace edgewise {

/// Opaque vertex token. Producers (lattice points, poset elements, subsets)
/// choose the numbering; the complex only relies on the total order.
using VertexId = std::int64_t;

/// Sorted, duplicate-free vertex list.
using Simplex = std::vector<VertexId>;

Simplex make_simplex(std::vector<VertexId> vertices);
bool is_subset(const Simplex& a, const Simplex& b);  // a ⊆ b
Simplex set_union(const Simplex& a, const Simplex& b);
Simplex set_intersection(const Simplex& a, const Simplex& b);
Simplex set_difference(const Simplex& a, const Simplex& b);

/// Abstract simplicial complex stored as its facets.
///
/// The constructor accepts any generating family of faces and keeps only the
/// inclusion-maximal ones, sorted lexicographically. A complex whose only
/// facet is the empty simplex is the empty complex {∅} (dimension -1); a
/// complex with no facets at all is the void complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<Simplex> faces);

  static SimplicialComplex empty_complex() { return SimplicialComplex({Simplex{}}); }
  static SimplicialComplex simplex(Simplex vertices) { return SimplicialComplex({std::move(vertices)}); }

  const std::vector<Simplex>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  bool is_void() const { return facets_.empty(); }
  int dimension() const;  // -1 for {∅}; -2 for the void complex
  bool is_pure() const;
  bool has_face(const Simplex& sigma) const;
  bool has_facet(const Simplex& sigma) const;

  /// (f_{-1}, f_0, ..., f_d). Computed once per complex and shared by copies.
  const CountVec& f_vector() const;

  /// Number of i-faces for i in [-1, d].
  Count face_count(int dim) const;

  /// All faces of the given dimension, sorted.
  std::vector<Simplex> faces_of_dimension(int dim) const;

  bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

 private:
  std::vector<Simplex> facets_;
  std::vector<VertexId> vertices_;

  struct FaceCache {
    std::once_flag once;
    CountVec f;
  };
  std::shared_ptr<FaceCache> cache_ = std::make_shared<FaceCache>();
};

/// h_s = sum_{i<=s} (-1)^{s-i} C(d+1-i, d+1-s) f_{i-1}, s = 0..d+1.
/// f must be (f_{-1}, ..., f_d) with f_{-1} = 1.
CountVec h_from_f(const CountVec& f, int d);
CountVec h_vector(const SimplicialComplex& k);

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);

/// Facets {a ∪ b}. If the vertex sets overlap, b's ids are shifted past the
/// largest id of a first.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Same complex with every vertex id increased by offset.
SimplicialComplex shifted(const SimplicialComplex& k, VertexId offset);

/// Relabel through an explicit map (must be injective on the vertex set).
SimplicialComplex relabeled(const SimplicialComplex& k, const std::map<VertexId, VertexId>& map);

/// Union of the facet families.
SimplicialComplex complex_union(const std::vector<SimplicialComplex>& parts);

// ---------------------------------------------------------------------------
// Shelling verification

struct ShellingWitness {
  std::size_t earlier;  // l: position of a facet containing F_j \ {v}
  VertexId vertex;      // v
};

struct ShellingCertificate {
  std::vector<Simplex> order;
  std::vector<Simplex> restrictions;  // R(F_j), sorted
  std::vector<int> types;             // |R(F_j)|
  bool valid = false;
  // First failing pair: smallest j, then smallest i < j (0-based positions).
  std::optional<std::pair<std::size_t, std::size_t>> failure;

  /// For i < j of a valid certificate: a vertex v of R(F_j) outside F_i and
  /// an earlier facet F_l containing F_j \ {v}, so F_i ∩ F_j ⊆ F_l ∩ F_j.
  ShellingWitness witness(std::size_t i, std::size_t j) const;

  /// Number of facets of each type, padded to length `length`.
  CountVec type_histogram(std::size_t length) const;

  // earliest_ridge_owner[j][v] for v in R(F_j)
  std::vector<std::map<VertexId, std::size_t>> ridge_owner;
};

/// Check the shelling condition for `order`, which must list every facet of
/// the pure complex `k` exactly once (DomainError otherwise). A violated
/// condition is reported in the certificate, not thrown.
ShellingCertificate verify_shelling(const SimplicialComplex& k, const std::vector<Simplex>& order);

// ---------------------------------------------------------------------------
// Isomorphism

inline constexpr std::size_t kDefaultIsomorphismBound = 64;

struct IsomorphismResult {
  bool isomorphic = false;
  std::map<VertexId, VertexId> mapping;  // vertex of a -> vertex of b
};

/// Backtracking search for a vertex bijection carrying the facets of a onto
/// those of b. Cheap invariants (vertex and face counts) are compared first;
/// only the search itself is subject to `vertex_bound` (CapacityError).
IsomorphismResult find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                   std::size_t vertex_bound = kDefaultIsomorphismBound);

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                    std::size_t vertex_bound = kDefaultIsomorphismBound);

}  // namespace edgewise
