#include "edgewise/poset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace edgewise {

GradedPoset::GradedPoset(std::vector<int> ranks, std::vector<Cover> covers, bool labeled)
    : ranks_(std::move(ranks)), covers_(std::move(covers)), labeled_(labeled) {
  const int n = size();
  up_.resize(n);
  down_.resize(n);
  for (std::size_t c = 0; c < covers_.size(); ++c) {
    const auto& cv = covers_[c];
    require(cv.lower >= 0 && cv.lower < n && cv.upper >= 0 && cv.upper < n, "GradedPoset: cover out of range");
    require(ranks_[cv.upper] == ranks_[cv.lower] + 1, "GradedPoset: rank must increase by one along covers");
    up_[cv.lower].push_back(static_cast<int>(c));
    down_[cv.upper].push_back(static_cast<int>(c));
  }
}

std::vector<int> GradedPoset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> GradedPoset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

std::optional<int> GradedPoset::bottom() const {
  auto m = minimal_elements();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

std::optional<int> GradedPoset::top() const {
  auto m = maximal_elements();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

bool GradedPoset::leq(int x, int y) const {
  if (x == y) return true;
  if (ranks_[x] >= ranks_[y]) return false;
  if (is_chain_product()) {
    for (std::size_t i = 0; i < lengths_.size(); ++i)
      if (coords_[x][i] > coords_[y][i]) return false;
    return true;
  }
  std::vector<char> seen(size(), 0);
  std::vector<int> stack{x};
  while (!stack.empty()) {
    int z = stack.back();
    stack.pop_back();
    for (int c : up_[z]) {
      int u = covers_[c].upper;
      if (u == y) return true;
      if (!seen[u] && ranks_[u] < ranks_[y]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return false;
}

GradedPoset GradedPoset::with_labels(const std::vector<int>& labels) const {
  require(labels.size() == covers_.size(), "with_labels: one label per cover required");
  GradedPoset p = *this;
  for (std::size_t c = 0; c < labels.size(); ++c) p.covers_[c].label = labels[c];
  p.labeled_ = true;
  return p;
}

GradedPoset chain_product(const std::vector<int>& lengths) {
  require(!lengths.empty(), "chain_product: need at least one chain");
  for (int m : lengths) require(m >= 1, "chain_product: chain lengths must be positive");
  const int s = static_cast<int>(lengths.size());

  // mixed radix, last coordinate fastest: lexicographic numbering
  std::vector<long long> stride(s, 1);
  for (int i = s - 2; i >= 0; --i) stride[i] = stride[i + 1] * (lengths[i + 1] + 1);
  const long long total = stride[0] * (lengths[0] + 1);
  require(total <= 10'000'000, "chain_product: too many elements");

  std::vector<std::vector<int>> coords(total);
  std::vector<int> ranks(total);
  std::vector<Cover> covers;
  for (long long id = 0; id < total; ++id) {
    std::vector<int> x(s);
    long long r = id;
    for (int i = 0; i < s; ++i) {
      x[i] = static_cast<int>(r / stride[i]);
      r %= stride[i];
    }
    ranks[id] = std::accumulate(x.begin(), x.end(), 0);
    for (int i = 0; i < s; ++i)
      if (x[i] < lengths[i]) covers.push_back({static_cast<int>(id), static_cast<int>(id + stride[i]), i + 1});
    coords[id] = std::move(x);
  }
  GradedPoset p(std::move(ranks), std::move(covers), false);
  p.lengths_ = lengths;
  p.coords_ = std::move(coords);
  return p;
}

GradedPoset r_label_product(const GradedPoset& p) {
  require(p.is_chain_product(), "r_label_product: input is not a product of chains");
  std::vector<int> labels;
  labels.reserve(p.covers().size());
  for (const auto& c : p.covers()) {
    const auto& a = p.coords(c.lower);
    const auto& b = p.coords(c.upper);
    int idx = 0;
    while (a[idx] == b[idx]) ++idx;
    labels.push_back(idx + 1);
  }
  return p.with_labels(labels);
}

std::vector<LabeledChain> maximal_chains(const GradedPoset& p, int x, int y) {
  require(x >= 0 && x < p.size() && y >= 0 && y < p.size(), "maximal_chains: element out of range");
  require(p.leq(x, y), "maximal_chains: x is not below y");
  std::vector<LabeledChain> out;
  LabeledChain cur;
  cur.elements.push_back(x);
  std::function<void(int)> walk = [&](int z) {
    if (z == y) {
      out.push_back(cur);
      return;
    }
    for (int c : p.up(z)) {
      const auto& cv = p.covers()[c];
      if (!p.leq(cv.upper, y)) continue;
      cur.elements.push_back(cv.upper);
      if (p.labeled()) cur.labels.push_back(cv.label);
      walk(cv.upper);
      cur.elements.pop_back();
      if (p.labeled()) cur.labels.pop_back();
    }
  };
  walk(x);
  std::sort(out.begin(), out.end(), [](const LabeledChain& a, const LabeledChain& b) {
    return std::tie(a.labels, a.elements) < std::tie(b.labels, b.elements);
  });
  return out;
}

RLabelingReport verify_r_labeling(const GradedPoset& p) {
  require(p.labeled(), "verify_r_labeling: poset is not labeled");
  RLabelingReport report;
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      ++report.intervals_checked;
      int rising = 0;
      std::function<void(int, int)> walk = [&](int z, int last) {
        if (rising > 1) return;
        if (z == y) {
          ++rising;
          return;
        }
        for (int c : p.up(z)) {
          const auto& cv = p.covers()[c];
          if (cv.label < last || !p.leq(cv.upper, y)) continue;
          walk(cv.upper, cv.label);
        }
      };
      walk(x, std::numeric_limits<int>::min());
      if (rising != 1) {
        report.failure = std::make_pair(x, y);
        return report;
      }
    }
  }
  report.valid = true;
  return report;
}

SimplicialComplex order_complex(const GradedPoset& p, bool reduced, std::size_t max_facets) {
  std::vector<int> starts;
  std::optional<int> top;
  if (reduced) {
    require(p.is_bounded(), "order_complex: reduced order complex needs a bounded poset");
    starts = {*p.bottom()};
    top = p.top();
  } else {
    starts = p.minimal_elements();
  }
  std::vector<Simplex> facets;
  Simplex cur;
  std::function<void(int)> walk = [&](int z) {
    cur.push_back(z);
    if (p.up(z).empty()) {
      if (facets.size() >= max_facets) throw CapacityError("order_complex: more maximal chains than the facet budget");
      Simplex f;
      for (VertexId v : cur)
        if (!reduced || (v != starts.front() && v != *top)) f.push_back(v);
      facets.push_back(make_simplex(std::move(f)));
    } else {
      for (int c : p.up(z)) walk(p.covers()[c].upper);
    }
    cur.pop_back();
  };
  for (int s : starts) walk(s);
  return SimplicialComplex(std::move(facets));
}

GradedPoset stack_posets(const std::vector<GradedPoset>& parts, bool drop_last_top) {
  require(!parts.empty(), "stack_posets: nothing to stack");
  bool labeled = true;
  for (const auto& p : parts) {
    require(p.is_bounded(), "stack_posets: every part must be bounded");
    labeled = labeled && p.labeled();
  }
  std::vector<int> ranks;
  std::vector<Cover> covers;
  int glue = -1;  // id of the previous top in the stacked poset
  int rank_offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    const bool last = i + 1 == parts.size();
    const int bottom = *p.bottom();
    const int top = *p.top();
    std::vector<int> id(p.size(), -1);
    for (int x = 0; x < p.size(); ++x) {
      if (x == bottom && glue >= 0) {
        id[x] = glue;
      } else if (x == top && last && drop_last_top) {
        continue;
      } else {
        id[x] = static_cast<int>(ranks.size());
        ranks.push_back(p.rank(x) - p.rank(bottom) + rank_offset);
      }
    }
    for (const auto& c : p.covers())
      if (id[c.lower] >= 0 && id[c.upper] >= 0) covers.push_back({id[c.lower], id[c.upper], c.label});
    glue = id[top];
    rank_offset += p.rank(top) - p.rank(bottom);
  }
  return GradedPoset(std::move(ranks), std::move(covers), labeled);
}

SimplicialComplex reduced_product_complex(const Partition& lambda) {
  require(lambda.size() >= 1, "reduced_product_complex: empty partition");
  return order_complex(chain_product(lambda.parts()), true);
}

SimplicialComplex k_lambda(const Partition& lambda) {
  require(lambda.total() >= 2, "k_lambda: λ must partition some k >= 2");
  return reduced_product_complex(lambda);
}

SimplicialComplex barycentric_boundary(int k) {
  require(k >= 2 && k <= 20, "barycentric_boundary: k out of range");
  std::vector<Simplex> facets;
  for (const auto& w : permutations(k)) {
    Simplex f;
    VertexId mask = 0;
    for (int i = 0; i + 1 < k; ++i) {
      mask |= VertexId{1} << (w[i] - 1);
      f.push_back(mask);
    }
    facets.push_back(make_simplex(std::move(f)));
  }
  return SimplicialComplex(std::move(facets));
}

CountVec h_k_lambda_descents(const Partition& lambda) {
  const int k = lambda.total();
  require(k >= 2, "h_k_lambda: λ must partition some k >= 2");
  std::vector<std::uint64_t> h(k, 0);
  for (const auto& w : multiset_permutations(lambda)) ++h[descent_count(w)];
  return to_counts(h);
}

CountVec h_k_lambda_recursive(const Partition& lambda) {
  require(lambda.total() >= 2, "h_k_lambda: λ must partition some k >= 2");
  // one part: a single word with no descents
  CountVec h(lambda[0], Count(0));
  h[0] = 1;
  int k = lambda[0];
  for (int part = 1; part < lambda.size(); ++part) {
    const int ls = lambda[part];
    k += ls;
    CountVec next(k, Count(0));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j <= ls && j <= i; ++j) {
        if (i - j >= static_cast<int>(h.size())) continue;
        next[i] += binomial(k - ls - i + j, j) * binomial(i + ls - j, ls - j) * h[i - j];
      }
    }
    h = std::move(next);
  }
  return h;
}

CountVec h_k_lambda_from_f(const Partition& lambda) { return h_vector(k_lambda(lambda)); }

LastNonzero h_k_lambda_last_nonzero(const Partition& lambda) {
  require(lambda.total() >= 2, "h_k_lambda: λ must partition some k >= 2");
  LastNonzero r;
  r.index = lambda.total() - lambda[0];
  r.value = 1;
  for (int i = 1; i < lambda.size(); ++i) r.value *= binomial(lambda[0], lambda[i]);
  return r;
}

CountVec h_two_part(const Partition& lambda) {
  require(lambda.size() == 2, "h_two_part: λ must have exactly two parts");
  const int k = lambda.total();
  CountVec h(k, Count(0));
  for (int i = 0; i < k; ++i) h[i] = binomial(lambda[0], i) * binomial(lambda[1], i);
  return h;
}

bool is_join_irreducible(const SimplicialComplex& k, std::size_t vertex_bound) {
  const auto& verts = k.vertices();
  const std::size_t n = verts.size();
  if (n > vertex_bound) {
    throw CapacityError("is_join_irreducible: " + std::to_string(n) + " vertices exceeds the bound of " +
                        std::to_string(vertex_bound));
  }
  if (n <= 1) return true;
  auto index = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<char> adjacent(n * n, 0);
  for (const auto& f : k.facets())
    for (VertexId a : f)
      for (VertexId b : f) adjacent[index(a) * n + index(b)] = 1;

  // components of the non-adjacency graph
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!adjacent[a * n + b]) parent[find(a)] = find(b);
  std::vector<std::size_t> comp(n);
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    auto it = std::find(roots.begin(), roots.end(), r);
    comp[v] = static_cast<std::size_t>(it - roots.begin());
    if (it == roots.end()) roots.push_back(r);
  }
  const std::size_t c = roots.size();
  if (c == 1) return true;
  if (c > 20) throw CapacityError("is_join_irreducible: too many candidate splits");

  for (std::uint32_t mask = 1; mask < (1u << c) - 1; ++mask) {
    if (!(mask & 1u)) continue;  // component 0 always on the first side
    std::set<Simplex> left, right;
    for (const auto& f : k.facets()) {
      Simplex a, b;
      for (VertexId v : f) ((mask >> comp[index(v)]) & 1u ? a : b).push_back(v);
      left.insert(std::move(a));
      right.insert(std::move(b));
    }
    if (left.size() * right.size() == k.num_facets()) return false;
  }
  return true;
}

}  // namespace edgewise
