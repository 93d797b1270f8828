#include <algorithm>

#include "edgewise/links.hpp"

namespace edgewise {

namespace {

// Σ over μ in Par(n) with at most max_parts parts of Π multichoose(choices(n_i + 1) - 1, m_i).
template <typename Choices>
Count weighted_partition_sum(int n, int max_parts, Choices choices) {
  Count total = 0;
  for (const auto& mu : partitions(n)) {
    if (mu.size() > max_parts) continue;
    Count term = 1;
    for (const auto& [part, mult] : mu.multiplicities()) term *= multichoose(choices(part + 1) - 1, mult);
    total += term;
  }
  return total;
}

}  // namespace

Count count_faces_with_link_type(int k, int q, const Partition& beta) {
  require(k >= 2 && q >= 1, "count_faces_with_link_type: need k >= 2, q >= 1");
  require(beta.total() == k, "count_faces_with_link_type: β must partition k");
  const int s = beta.size();
  if (s > q) return 0;
  Count denom = 1;
  for (const auto& [part, mult] : beta.multiplicities()) denom *= factorial(mult);
  return Count(k) * factorial(s - 1) / denom;
}

Count count_link_types(int k, int q) {
  require(k >= 1 && q >= 1, "count_link_types: need k >= 1, q >= 1");
  return partition_count(k, std::min(k, q));
}

Count q_sequence(int s) {
  require(s >= 0, "q_sequence: s must be nonnegative");
  return weighted_partition_sum(s + 1, s + 1, [](int n) { return static_cast<long long>(partition_count(n)); });
}

Count count_distinct_links_dim(int m) {
  require(m >= 0, "count_distinct_links_dim: m must be nonnegative");
  Count total = 1;
  for (int j = 0; j <= m; ++j) total += q_sequence(j);
  return total;
}

Count q_restricted(int k, int q, int s, int t) {
  require(k >= 2 && q >= 1, "q_restricted: need k >= 2, q >= 1");
  require(t >= 1 && t <= k, "q_restricted: t must lie in [1, k]");
  require(s >= 0 && s <= k - t - 1, "q_restricted: s must lie in [0, k-t-1]");
  const int max_parts = s == k - t - 1 ? t : t - 1;
  return weighted_partition_sum(s + 1, max_parts,
                                [q](int n) { return static_cast<long long>(partition_count(n, q)); });
}

Count count_link_types_of_faces(int k, int q, int t) {
  require(k >= 2 && q >= 1, "count_link_types_of_faces: need k >= 2, q >= 1");
  require(t >= 1 && t <= k, "count_link_types_of_faces: t must lie in [1, k]");
  Count total = 1;
  for (int s = 0; s <= k - t - 1; ++s) total += q_restricted(k, q, s, t);
  return total;
}

}  // namespace edgewise
