#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgewise/common.hpp"

namespace edgewise {

/// A weakly decreasing sequence of positive integers. The empty partition
/// stands for the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws DomainError

  // Sorts the input decreasing before validating positivity.
  static Partition normalized(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int total() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](int i) const { return parts_[i]; }

  // (n_1, m_1), ..., (n_t, m_t) with n_1 > ... > n_t.
  std::vector<std::pair<int, int>> multiplicities() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

using Word = std::vector<int>;

/// Partitions of k (into exactly s parts if given), reverse-lexicographic:
/// (6), (5,1), (4,2), (4,1,1), (3,3), ...
std::vector<Partition> partitions(int k, std::optional<int> parts = std::nullopt);

/// Number of partitions of n into at most max_parts parts (all parts when
/// max_parts is empty). Counted by enumeration.
std::uint64_t partition_count(int n, std::optional<int> max_parts = std::nullopt);

/// All words over {1^{l1}, 2^{l2}, ..., s^{ls}}, lexicographic.
std::vector<Word> multiset_permutations(const Partition& lambda);

/// All permutations of [n], lexicographic.
std::vector<Word> permutations(int n);

struct DescentStats {
  std::vector<int> descent_set;  // 1-based positions i with w_i > w_{i+1}
  int descents = 0;
  std::optional<int> init;  // empty unless w is a permutation of [n]
};

bool is_permutation_of_n(std::span<const int> w);
DescentStats descent_stats(std::span<const int> w);
int descent_count(std::span<const int> w);

/// Least t with {w_1..w_t} = [t]. Throws DomainError for non-permutations.
int faithful_initial_part(std::span<const int> w);

/// Eulerian number A(k, i) from the (i+1)A(k-1,i) + (k-i)A(k-1,i-1) recursion.
Count eulerian(int k, int i);
CountVec eulerian_row(int k);  // A(k,0), ..., A(k,k-1)

/// X_1..X_n, where X_j counts permutations of [j] with init = j.
CountVec x_sequence(int n);

/// h^k_{i,d}: permutations of [k] with init = i and d-1 descents.
///
/// Rows are indexed by init (1..k) and columns by descent count; the
/// accessors take the init value and the descent count directly.
class DescentInitTable {
 public:
  explicit DescentInitTable(int k);  // zero table
  int k() const { return k_; }
  const Count& count(int init, int descents) const;
  Count& count(int init, int descents);
  CountVec row_for_init(int init) const;      // length k
  CountVec column_for_descents(int descents) const;
  CountVec column_sums() const;
  CountVec row_sums() const;
  // (1, 2, ..., k) * H: entry d is sum_i i * count(i, d).
  CountVec init_weighted_row() const;

  bool operator==(const DescentInitTable&) const = default;

 private:
  int k_;
  std::vector<Count> cells_;
};

/// Exhaustive enumeration over S_k.
DescentInitTable h_matrix(int k);

/// Rows of H_k from the convolution recursion, each of length k.
std::vector<CountVec> h_rows_recursive(int k);

}  // namespace edgewise
