#include "edgewise/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace edgewise {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, "partition parts must be positive");
    require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
  }
}

Partition Partition::normalized(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

namespace {

void generate_partitions(int remaining, int max_part, std::vector<int>& current,
                         std::vector<Partition>& out, std::optional<int> parts) {
  if (remaining == 0) {
    if (!parts || static_cast<int>(current.size()) == *parts) out.emplace_back(current);
    return;
  }
  if (parts && static_cast<int>(current.size()) >= *parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate_partitions(remaining - p, p, current, out, parts);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int k, std::optional<int> parts) {
  require(k >= 1, "partitions: k must be positive");
  if (parts) require(*parts >= 1 && *parts <= k, "partitions: part count must lie in [1, k]");
  std::vector<Partition> out;
  std::vector<int> current;
  generate_partitions(k, k, current, out, parts);
  return out;
}

std::uint64_t partition_count(int n, std::optional<int> max_parts) {
  if (n == 0) return 1;
  require(n > 0, "partition_count: negative argument");
  std::uint64_t total = 0;
  for (const auto& p : partitions(n)) {
    if (!max_parts || p.size() <= *max_parts) ++total;
  }
  return total;
}

std::vector<Word> multiset_permutations(const Partition& lambda) {
  require(lambda.total() >= 1, "multiset_permutations: empty partition");
  Word w;
  for (int letter = 1; letter <= lambda.size(); ++letter) {
    w.insert(w.end(), lambda[letter - 1], letter);
  }
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Word> permutations(int n) {
  require(n >= 1, "permutations: n must be positive");
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool is_permutation_of_n(std::span<const int> w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

int descent_count(std::span<const int> w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

int faithful_initial_part(std::span<const int> w) {
  require(!w.empty(), "init of an empty word");
  require(is_permutation_of_n(w), "init is only defined for permutations of [n]");
  int running_max = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    running_max = std::max(running_max, w[t]);
    // distinct entries with max t+1 among t+1 entries means exactly [t+1]
    if (running_max == static_cast<int>(t) + 1) return running_max;
  }
  return static_cast<int>(w.size());
}

DescentStats descent_stats(std::span<const int> w) {
  require(!w.empty(), "descent statistics of an empty word");
  DescentStats s;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) s.descent_set.push_back(static_cast<int>(i) + 1);
  }
  s.descents = static_cast<int>(s.descent_set.size());
  if (is_permutation_of_n(w)) s.init = faithful_initial_part(w);
  return s;
}

Count eulerian(int k, int i) {
  require(k >= 1, "eulerian: k must be positive");
  require(i >= 0 && i <= k - 1, "eulerian: i must lie in [0, k-1]");
  return eulerian_row(k)[i];
}

CountVec eulerian_row(int k) {
  require(k >= 1, "eulerian: k must be positive");
  CountVec row{1};
  for (int n = 2; n <= k; ++n) {
    CountVec next(n, Count(0));
    for (int i = 0; i < n; ++i) {
      if (i < n - 1) next[i] += (i + 1) * row[i];
      if (i >= 1) next[i] += (n - i) * row[i - 1];
    }
    row = std::move(next);
  }
  return row;
}

CountVec x_sequence(int n) {
  require(n >= 1, "x_sequence: n must be positive");
  CountVec x(n + 1, Count(0));
  for (int j = 1; j <= n; ++j) {
    Count v = factorial(j);
    for (int t = 1; t < j; ++t) v -= factorial(j - t) * x[t];
    x[j] = v;
  }
  return CountVec(x.begin() + 1, x.end());
}

DescentInitTable::DescentInitTable(int k) : k_(k), cells_(static_cast<std::size_t>(k) * k, Count(0)) {
  require(k >= 1, "DescentInitTable: k must be positive");
}

const Count& DescentInitTable::count(int init, int descents) const {
  require(init >= 1 && init <= k_ && descents >= 0 && descents < k_, "DescentInitTable: index out of range");
  return cells_[static_cast<std::size_t>(init - 1) * k_ + descents];
}

Count& DescentInitTable::count(int init, int descents) {
  require(init >= 1 && init <= k_ && descents >= 0 && descents < k_, "DescentInitTable: index out of range");
  return cells_[static_cast<std::size_t>(init - 1) * k_ + descents];
}

CountVec DescentInitTable::row_for_init(int init) const {
  CountVec row;
  for (int d = 0; d < k_; ++d) row.push_back(count(init, d));
  return row;
}

CountVec DescentInitTable::column_for_descents(int descents) const {
  CountVec col;
  for (int i = 1; i <= k_; ++i) col.push_back(count(i, descents));
  return col;
}

CountVec DescentInitTable::column_sums() const {
  CountVec s(k_, Count(0));
  for (int i = 1; i <= k_; ++i)
    for (int d = 0; d < k_; ++d) s[d] += count(i, d);
  return s;
}

CountVec DescentInitTable::row_sums() const {
  CountVec s(k_, Count(0));
  for (int i = 1; i <= k_; ++i)
    for (int d = 0; d < k_; ++d) s[i - 1] += count(i, d);
  return s;
}

CountVec DescentInitTable::init_weighted_row() const {
  CountVec s(k_, Count(0));
  for (int i = 1; i <= k_; ++i)
    for (int d = 0; d < k_; ++d) s[d] += i * count(i, d);
  return s;
}

DescentInitTable h_matrix(int k) {
  require(k >= 1, "h_matrix: k must be positive");
  std::vector<std::uint64_t> cells(static_cast<std::size_t>(k) * k, 0);
  Word w(k);
  std::iota(w.begin(), w.end(), 1);
  do {
    ++cells[static_cast<std::size_t>(faithful_initial_part(w) - 1) * k + descent_count(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  DescentInitTable table(k);
  for (int i = 1; i <= k; ++i)
    for (int d = 0; d < k; ++d) table.count(i, d) = cells[static_cast<std::size_t>(i - 1) * k + d];
  return table;
}

namespace {

// h(Sd(boundary of the (n-1)-simplex)) = Eulerian row n; the n = 0 case is
// the empty complex with h = (1).
CountVec sd_boundary_h(int n) { return n == 0 ? CountVec{1} : eulerian_row(n); }

}  // namespace

std::vector<CountVec> h_rows_recursive(int k) {
  require(k >= 1, "h_rows_recursive: k must be positive");
  // last_rows[t] holds h^t_t, needed by every larger k.
  std::vector<CountVec> last_rows(k + 1);
  std::vector<CountVec> rows;
  for (int n = 1; n <= k; ++n) {
    rows.assign(n, CountVec{});
    if (n > 1) rows[0] = padded(sd_boundary_h(n - 1), n);
    for (int t = 2; t < n; ++t) rows[t - 1] = padded(convolve(last_rows[t], sd_boundary_h(n - t)), n);
    CountVec last = sd_boundary_h(n);
    for (int t = 1; t < n; ++t)
      for (int d = 0; d < n; ++d) last[d] -= rows[t - 1][d];
    rows[n - 1] = last;
    last_rows[n] = last;
  }
  return rows;
}

}  // namespace edgewise
