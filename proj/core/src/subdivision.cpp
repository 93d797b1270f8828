#include "edgewise/subdivision.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "edgewise/poset.hpp"

namespace edgewise {

Subdivision::Subdivision(int k, int q) : k_(k), q_(q) {
  require(k >= 2, "T_{k,q} needs k >= 2");
  require(q >= 1, "T_{k,q} needs q >= 1");
  if (vertex_count() > Count(std::numeric_limits<std::int64_t>::max() / 4)) return;
  const int n = q + k - 1;
  const int rmax = k - 1;
  binom_.assign(n + 1, std::vector<std::uint64_t>(rmax + 1, 0));
  for (int i = 0; i <= n; ++i) {
    binom_[i][0] = 1;
    for (int r = 1; r <= std::min(i, rmax); ++r) {
      std::uint64_t s;
      if (__builtin_add_overflow(binom_[i - 1][r - 1], binom_[i - 1][r], &s)) s = std::numeric_limits<std::uint64_t>::max();
      binom_[i][r] = s;
    }
  }
}

Count Subdivision::vertex_count() const { return binomial(q_ + k_ - 1, k_ - 1); }

Count Subdivision::facet_count() const {
  Count c = 1;
  for (int i = 0; i < k_ - 1; ++i) c *= q_;
  return c;
}

bool Subdivision::contains(const LatticeVertex& v) const {
  if (static_cast<int>(v.size()) != k_ - 1) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > q_) return false;
    if (i > 0 && v[i - 1] > v[i]) return false;
  }
  return true;
}

bool Subdivision::is_code(const FacetCode& a) const {
  if (static_cast<int>(a.size()) != k_ - 1) return false;
  return std::all_of(a.begin(), a.end(), [&](int x) { return x >= 0 && x < q_; });
}

bool Subdivision::is_interior(const LatticeVertex& v) const {
  check_vertex(v);
  if (v.front() <= 0 || v.back() >= q_) return false;
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

void Subdivision::check_vertex(const LatticeVertex& v) const {
  if (!contains(v)) throw DomainError("not a point of W_{" + std::to_string(k_) + "," + std::to_string(q_) + "}: " + to_string(v));
}

void Subdivision::check_code(const FacetCode& a) const {
  if (!is_code(a)) throw DomainError("not a facet code for T_{" + std::to_string(k_) + "," + std::to_string(q_) + "}: " + to_string(a));
}

std::uint64_t Subdivision::sequences(int length, int low) const { return binom_[q_ - low + length][length]; }

VertexId Subdivision::id(const LatticeVertex& v) const {
  check_vertex(v);
  if (binom_.empty()) throw CapacityError("vertex ids of T_{k,q} do not fit in 64 bits");
  const int n = k_ - 1;
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    for (int x = prev; x < v[i]; ++x) rank += sequences(n - i - 1, x);
    prev = v[i];
  }
  return static_cast<VertexId>(rank);
}

LatticeVertex Subdivision::vertex(VertexId id) const {
  if (binom_.empty()) throw CapacityError("vertex ids of T_{k,q} do not fit in 64 bits");
  require(id >= 0 && Count(id) < vertex_count(), "vertex id out of range");
  const int n = k_ - 1;
  auto rest = static_cast<std::uint64_t>(id);
  LatticeVertex v(n);
  int x = 0;
  for (int i = 0; i < n; ++i) {
    while (rest >= sequences(n - i - 1, x)) {
      rest -= sequences(n - i - 1, x);
      ++x;
    }
    v[i] = x;
  }
  return v;
}

std::vector<LatticeVertex> Subdivision::vertex_set(std::size_t max_vertices) const {
  if (vertex_count() > Count(max_vertices)) throw CapacityError("vertex_set: more vertices than the budget");
  std::vector<LatticeVertex> out;
  LatticeVertex v(k_ - 1, 0);
  for (;;) {
    out.push_back(v);
    int i = k_ - 2;
    while (i >= 0 && v[i] == q_) --i;
    if (i < 0) break;
    const int next = v[i] + 1;
    for (int j = i; j < k_ - 1; ++j) v[j] = next;
  }
  return out;
}

std::vector<FacetCode> Subdivision::codes(std::size_t max_facets) const {
  if (facet_count() > Count(max_facets)) {
    throw CapacityError("T_{" + std::to_string(k_) + "," + std::to_string(q_) + "} has " +
                        facet_count().str() + " facets, over the budget of " + std::to_string(max_facets));
  }
  std::vector<FacetCode> out;
  FacetCode a(k_ - 1, 0);
  for (;;) {
    out.push_back(a);
    int i = k_ - 2;
    while (i >= 0 && a[i] == q_ - 1) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

std::vector<LatticeVertex> Subdivision::decode(const FacetCode& a) const {
  check_code(a);
  const int n = k_ - 1;
  // alpha: indices sorted by value, ties by index; pi = alpha^{-1}
  std::vector<int> alpha(n);
  std::iota(alpha.begin(), alpha.end(), 0);
  std::stable_sort(alpha.begin(), alpha.end(), [&](int x, int y) { return a[x] < a[y]; });
  std::vector<int> pi(n);
  LatticeVertex v(n);
  for (int j = 0; j < n; ++j) {
    pi[alpha[j]] = j;
    v[j] = a[alpha[j]];
  }
  std::vector<LatticeVertex> out{v};
  // v^{(i+1)} = v^{(i)} + e_{pi_{k-i}}: entries of a consumed right to left
  for (int i = n - 1; i >= 0; --i) {
    ++v[pi[i]];
    out.push_back(v);
  }
  return out;
}

Simplex Subdivision::facet(const FacetCode& a) const {
  std::vector<VertexId> ids;
  for (const auto& v : decode(a)) ids.push_back(id(v));
  return make_simplex(std::move(ids));
}

FacetCode Subdivision::encode(const LatticeVertex& v, const Word& pi) const {
  check_vertex(v);
  const int n = k_ - 1;
  require(static_cast<int>(pi.size()) == n && is_permutation_of_n(pi), "encode: π must be a permutation of [k-1]");
  std::vector<int> pos(n + 1);
  for (int j = 0; j < n; ++j) pos[pi[j]] = j;
  for (int i = 1; i < n; ++i) {
    if (v[i - 1] == v[i] && pos[i] > pos[i + 1]) {
      throw DomainError("encode: π is not consistent with v (" + std::to_string(i) + " must precede " +
                        std::to_string(i + 1) + ")");
    }
  }
  require(v.back() <= q_ - 1, "encode: F(v, π) leaves W_{k,q}");
  FacetCode a(n);
  for (int j = 0; j < n; ++j) a[j] = v[pi[j] - 1];
  return a;
}

FacetCode Subdivision::code_of(const Simplex& facet) const {
  require(static_cast<int>(facet.size()) == k_, "code_of: a facet has k vertices");
  std::vector<LatticeVertex> vs;
  for (VertexId x : facet) vs.push_back(vertex(x));
  auto sum = [](const LatticeVertex& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(vs.begin(), vs.end(), [&](const auto& x, const auto& y) { return sum(x) < sum(y); });
  const int n = k_ - 1;
  // step i adds e_c with c = pi_{k-i}
  Word pi(n);
  for (int i = 1; i <= n; ++i) {
    int c = -1;
    for (int j = 0; j < n; ++j) {
      const int d = vs[i][j] - vs[i - 1][j];
      require(d == 0 || d == 1, "code_of: vertices do not form a facet");
      if (d == 1) {
        require(c < 0, "code_of: vertices do not form a facet");
        c = j + 1;
      }
    }
    require(c > 0, "code_of: vertices do not form a facet");
    pi[n - i] = c;
  }
  FacetCode a = encode(vs.front(), pi);
  require(facet == this->facet(a), "code_of: vertices do not form a facet");
  return a;
}

SimplicialComplex Subdivision::build(std::size_t max_facets) const {
  std::vector<Simplex> facets;
  for (const auto& a : codes(max_facets)) facets.push_back(facet(a));
  return SimplicialComplex(std::move(facets));
}

std::map<int, FacetCode> Subdivision::ridge_neighbors(const FacetCode& a) const {
  check_code(a);
  const int n = k_ - 1;
  std::map<int, FacetCode> out;
  if (a.front() > 0) {
    FacetCode b(a.begin() + 1, a.end());
    b.push_back(a.front() - 1);
    out[k_] = b;
  }
  if (a.back() <= q_ - 2) {
    FacetCode b{a.back() + 1};
    b.insert(b.end(), a.begin(), a.end() - 1);
    out[1] = b;
  }
  for (int i = 1; i < n; ++i) {
    if (a[i - 1] != a[i]) {
      FacetCode b = a;
      std::swap(b[i - 1], b[i]);
      out[k_ - i] = b;
    }
  }
  return out;
}

bool Subdivision::is_edge(const LatticeVertex& x, const LatticeVertex& y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) return false;
  bool up = true, down = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int d = y[i] - x[i];
    up = up && (d == 0 || d == 1);
    down = down && (d == 0 || d == -1);
  }
  return up || down;
}

VertexType Subdivision::vertex_type(const LatticeVertex& v) const {
  check_vertex(v);
  VertexType t;
  const int n = k_ - 1;
  int lo = 0, hi = n;
  while (lo < n && v[lo] == 0) ++lo;
  while (hi > lo && v[hi - 1] == q_) --hi;
  t.leading_zeros = lo;
  t.trailing_q = n - hi;
  for (int i = lo; i < hi; ++i) {
    if (i > lo && v[i] == v[i - 1]) {
      ++t.runs.back();
    } else {
      t.runs.push_back(1);
    }
  }
  return t;
}

Partition Subdivision::vertex_partition(const LatticeVertex& v) const {
  const VertexType t = vertex_type(v);
  std::vector<int> parts{t.leading_zeros + t.trailing_q + 1};
  parts.insert(parts.end(), t.runs.begin(), t.runs.end());
  return Partition::normalized(std::move(parts));
}

std::vector<Word> Subdivision::star_permutations(const LatticeVertex& v) const {
  const VertexType t = vertex_type(v);
  // each class must appear in π in this fixed relative order
  std::vector<std::vector<int>> classes;
  {
    std::vector<int> c;
    for (int i = t.leading_zeros; i >= 1; --i) c.push_back(i);
    c.push_back(k_);
    for (int i = k_ - 1; i >= k_ - t.trailing_q; --i) c.push_back(i);
    classes.push_back(std::move(c));
  }
  int start = t.leading_zeros;
  for (int len : t.runs) {
    std::vector<int> c;
    for (int i = start + len; i > start; --i) c.push_back(i);
    classes.push_back(std::move(c));
    start += len;
  }
  std::vector<int> word;
  for (std::size_t c = 0; c < classes.size(); ++c) word.insert(word.end(), classes[c].size(), static_cast<int>(c));
  std::vector<Word> out;
  do {
    std::vector<std::size_t> next(classes.size(), 0);
    Word pi;
    pi.reserve(k_);
    for (int c : word) pi.push_back(classes[c][next[c]++]);
    out.push_back(std::move(pi));
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(out.begin(), out.end());
  return out;
}

FacetCode Subdivision::star_code(const LatticeVertex& v, const Word& pi) const {
  check_vertex(v);
  require(static_cast<int>(pi.size()) == k_ && is_permutation_of_n(pi), "star_code: π must be a permutation of [k]");
  const int i = static_cast<int>(std::find(pi.begin(), pi.end(), k_) - pi.begin());  // 0-based position of k
  FacetCode a;
  for (int j = i - 1; j >= 0; --j) a.push_back(v[pi[j] - 1]);
  for (int j = k_ - 1; j > i; --j) a.push_back(v[pi[j] - 1] - 1);
  if (!is_code(a)) throw DomainError("star_code: π does not index a facet around " + to_string(v));
  return a;
}

SimplicialComplex Subdivision::star_of_vertex(const LatticeVertex& v) const {
  std::vector<Simplex> facets;
  for (const auto& pi : star_permutations(v)) facets.push_back(facet(star_code(v, pi)));
  return SimplicialComplex(std::move(facets));
}

VertexLink Subdivision::link_of_vertex(const LatticeVertex& v, bool verify, std::size_t iso_bound) const {
  VertexLink out;
  out.type = vertex_type(v);
  out.lambda = vertex_partition(v);
  out.star = star_of_vertex(v);
  out.link = link(out.star, {id(v)});
  out.model = k_lambda(out.lambda);
  if (verify) out.verified = are_isomorphic(out.link, out.model, iso_bound);
  return out;
}

Simplex Subdivision::simplex_of(const std::vector<LatticeVertex>& face) const {
  std::vector<VertexId> ids;
  for (const auto& v : face) ids.push_back(id(v));
  return make_simplex(std::move(ids));
}

}  // namespace edgewise
