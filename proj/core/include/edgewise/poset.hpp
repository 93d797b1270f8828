#pragma once

#include <optional>
#include <vector>

#include "edgewise/combinatorics.hpp"
#include "edgewise/complex.hpp"

namespace edgewise {

struct Cover {
  int lower = 0;
  int upper = 0;
  int label = 0;  // meaningful only when the poset is labeled
};

/// Finite graded poset on elements 0..n-1 given by its Hasse diagram.
///
/// Products of chains additionally remember their chain lengths and the
/// coordinate tuple of every element.
class GradedPoset {
 public:
  GradedPoset() = default;
  GradedPoset(std::vector<int> ranks, std::vector<Cover> covers, bool labeled = false);

  int size() const { return static_cast<int>(ranks_.size()); }
  int rank(int x) const { return ranks_.at(x); }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& up(int x) const { return up_.at(x); }      // cover indices
  const std::vector<int>& down(int x) const { return down_.at(x); }  // cover indices
  bool labeled() const { return labeled_; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  bool is_bounded() const { return bottom() && top(); }

  bool leq(int x, int y) const;

  // Product-of-chains view; empty for other posets.
  const std::vector<int>& chain_lengths() const { return lengths_; }
  bool is_chain_product() const { return !lengths_.empty(); }
  const std::vector<int>& coords(int x) const { return coords_.at(x); }

  GradedPoset with_labels(const std::vector<int>& labels) const;

 private:
  friend GradedPoset chain_product(const std::vector<int>& lengths);

  std::vector<int> ranks_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> up_, down_;
  bool labeled_ = false;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> coords_;
};

/// C_{m1} x ... x C_{ms}, chain C_m having m+1 elements 0..m. Elements are
/// numbered in lexicographic order of their coordinate tuples.
GradedPoset chain_product(const std::vector<int>& lengths);

/// Labels each cover of a chain product with the 1-based index of the
/// coordinate it increments.
GradedPoset r_label_product(const GradedPoset& p);

struct LabeledChain {
  std::vector<int> elements;
  std::vector<int> labels;  // empty for unlabeled posets
};

/// Maximal chains of the interval [x, y], ordered by label word then elements.
std::vector<LabeledChain> maximal_chains(const GradedPoset& p, int x, int y);

struct RLabelingReport {
  bool valid = false;
  std::size_t intervals_checked = 0;
  std::optional<std::pair<int, int>> failure;  // interval without a unique rising chain
};

/// Checks that every interval [x, y], x < y, has exactly one maximal chain
/// with weakly increasing labels.
RLabelingReport verify_r_labeling(const GradedPoset& p);

/// Facets are the maximal chains. With `reduced`, the bottom and top are
/// removed first (P must be bounded). Vertex ids are element indices.
SimplicialComplex order_complex(const GradedPoset& p, bool reduced,
                                std::size_t max_facets = 1'000'000);

/// Ordinal stacking: the top of each poset is glued to the bottom of the
/// next. With `drop_last_top`, the final top is omitted, which models a
/// cyclic stack whose last top coincides with the first bottom.
GradedPoset stack_posets(const std::vector<GradedPoset>& parts, bool drop_last_top);

/// Reduced order complex of the chain product with the given part lengths.
/// For a single part of size 1 this is the empty complex {∅}.
SimplicialComplex reduced_product_complex(const Partition& lambda);

/// K_λ for λ a partition of k >= 2.
SimplicialComplex k_lambda(const Partition& lambda);

/// Sd(∂Δ^{k-1}) built from proper nonempty subsets of [k] (vertex id is the
/// subset bitmask); facets are the flags of a permutation.
SimplicialComplex barycentric_boundary(int k);

// h(K_λ), each of length k (h_0..h_{k-1}).
CountVec h_k_lambda_descents(const Partition& lambda);
CountVec h_k_lambda_recursive(const Partition& lambda);
CountVec h_k_lambda_from_f(const Partition& lambda);

struct LastNonzero {
  int index = 0;
  Count value;
};
/// Index k - λ_1 and value Π_{i>=2} C(λ_1, λ_i).
LastNonzero h_k_lambda_last_nonzero(const Partition& lambda);

/// h_i = C(λ_1, i) C(λ_2, i); λ must have exactly two parts.
CountVec h_two_part(const Partition& lambda);

/// True iff K is not M * N for complexes M, N each with at least one vertex.
/// Non-adjacent vertices must lie on the same side, so only unions of
/// components of the non-adjacency graph are tried.
bool is_join_irreducible(const SimplicialComplex& k, std::size_t vertex_bound = kDefaultIsomorphismBound);

}  // namespace edgewise
