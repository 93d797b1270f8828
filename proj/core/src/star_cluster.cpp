#include "edgewise/star_cluster.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace edgewise {

SimplicialComplex star_cluster(const SimplicialComplex& k, const Simplex& sigma) {
  const Simplex s = make_simplex(sigma);
  require(!s.empty(), "star_cluster: the simplex is empty");
  if (!k.has_face(s)) throw DomainError("star_cluster: simplex is not a face of the complex");
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    if (std::any_of(s.begin(), s.end(), [&](VertexId v) { return std::binary_search(f.begin(), f.end(), v); }))
      facets.push_back(f);
  }
  return SimplicialComplex(std::move(facets));
}

Word phi(int j, const Word& pi) {
  const int k = static_cast<int>(pi.size());
  Word out(k);
  for (int i = 0; i < k; ++i) out[i] = (pi[k - 1 - i] + j - 1) % k + 1;
  return out;
}

Word insert_top(int j, const Word& pi) {
  Word out = phi(j, pi);
  out.insert(out.begin() + (j - 1), static_cast<int>(pi.size()) + 1);
  return out;
}

namespace {

bool init_less(const Word& a, const Word& b) {
  const int ia = faithful_initial_part(a), ib = faithful_initial_part(b);
  if (ia != ib) return ia < ib;
  return a < b;
}

}  // namespace

std::vector<Word> init_shelling_order(int k) {
  require(k >= 2, "init_shelling_order: k must be at least 2");
  auto perms = permutations(k);
  std::stable_sort(perms.begin(), perms.end(), init_less);
  return perms;
}

Simplex sd_facet(const Word& pi) {
  Simplex f;
  VertexId mask = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    mask |= VertexId{1} << (pi[i] - 1);
    f.push_back(mask);
  }
  return make_simplex(std::move(f));
}

LatticeVertex default_star_cluster_base(int k, int q) {
  require(k >= 2, "star cluster: k must be at least 2");
  if (q < k + 1) {
    throw DomainError("star cluster with base v_i = i needs q >= " + std::to_string(k + 1) + " (got q = " +
                      std::to_string(q) + ")");
  }
  LatticeVertex v(k - 1);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

StarClusterReport sc_facets_structured(const Subdivision& t, const LatticeVertex& v) {
  const int k = t.k();
  const int q = t.q();
  require(static_cast<int>(v.size()) == k - 1, "star cluster: base vertex has the wrong length");
  bool interior = v.front() > 0 && v.back() < q - 1;
  for (std::size_t i = 1; i < v.size(); ++i) interior = interior && v[i - 1] < v[i];
  if (!interior) {
    throw DomainError("star cluster: need 0 < v_1 < ... < v_{k-1} < q-1 so every vertex of F is interior");
  }

  StarClusterReport r;
  r.k = k;
  r.q = q;
  r.base = v;
  r.vertices.push_back(v);
  for (int j = 1; j < k; ++j) {
    LatticeVertex next = r.vertices.back();
    ++next[k - j - 1];  // + e_{k-j}
    r.vertices.push_back(std::move(next));
  }

  const auto perms = permutations(k);
  for (int j = 1; j <= k; ++j) {
    StarClusterLayer layer;
    layer.j = j;
    for (const auto& pi : perms)
      if (faithful_initial_part(phi(j, pi)) >= j) layer.new_permutations.push_back(pi);
    if (j == 1) {
      std::stable_sort(layer.new_permutations.begin(), layer.new_permutations.end(), init_less);
    } else {
      std::stable_sort(layer.new_permutations.begin(), layer.new_permutations.end(),
                       [j](const Word& a, const Word& b) { return init_less(phi(j, a), phi(j, b)); });
    }
    for (const auto& pi : layer.new_permutations)
      layer.new_facets.push_back(t.facet(t.star_code(r.vertices[j - 1], pi)));
    r.order.insert(r.order.end(), layer.new_facets.begin(), layer.new_facets.end());
    r.layers.push_back(std::move(layer));
  }

  std::set<Simplex> all;
  for (const auto& u : r.vertices) {
    auto s = t.star_of_vertex(u);
    all.insert(s.facets().begin(), s.facets().end());
  }
  r.count_enumerated = all.size();
  r.count_ie = sc_count_ie(k);
  r.count_partition = sc_count_partition(k);
  r.x_next = x_sequence(k + 1).back();
  return r;
}

StarClusterReport sc_shelling_and_h(const Subdivision& t, const LatticeVertex& v) {
  StarClusterReport r = sc_facets_structured(t, v);
  const SimplicialComplex sc(r.order);
  require(sc.num_facets() == r.order.size(), "star cluster: structured layers repeat a facet");
  r.certificate = verify_shelling(sc, r.order);
  r.h_types = r.certificate.type_histogram(r.k + 1);
  r.h_formula = padded(h_matrix(r.k).init_weighted_row(), r.k + 1);
  r.h_from_f = h_vector(sc);
  return r;
}

Count sc_count_offsets(int k, const std::vector<int>& x) {
  const int m = static_cast<int>(x.size());
  require(m >= 1 && m <= 24, "sc_count_offsets: need 1 to 24 offsets");
  Count total = 0;
  std::vector<int> chosen;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    chosen.clear();
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) chosen.push_back(x[i]);
    Count term = factorial(k - chosen.back() + chosen.front());
    for (std::size_t i = 0; i + 1 < chosen.size(); ++i) term *= factorial(chosen[i + 1] - chosen[i]);
    if (chosen.size() % 2) total += term; else total -= term;
  }
  return total;
}

Count sc_count_ie(int k) {
  require(k >= 2, "sc_count_ie: k must be at least 2");
  std::vector<int> x(k);
  std::iota(x.begin(), x.end(), 1);
  return sc_count_offsets(k, x);
}

Count sc_count_partition(int k) {
  require(k >= 2, "sc_count_partition: k must be at least 2");
  Count total = 0;
  for (const auto& lambda : partitions(k)) {
    const int s = lambda.size();
    Count denom = 1;
    for (const auto& [part, mult] : lambda.multiplicities()) denom *= factorial(mult);
    Count term = Count(k) * factorial(s - 1) / denom;
    for (int p : lambda.parts()) term *= factorial(p);
    if (s % 2) total += term; else total -= term;
  }
  return total;
}

std::vector<int> face_offsets(const Subdivision& t, const std::vector<LatticeVertex>& face) {
  require(!face.empty(), "face_offsets: the face is empty");
  for (const auto& u : face) {
    if (!t.is_interior(u)) throw DomainError("star cluster of a face: vertex " + to_string(u) + " is not interior");
  }
  auto sorted = face;
  auto sum = [](const LatticeVertex& u) { return std::accumulate(u.begin(), u.end(), 0); };
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return sum(a) < sum(b); });
  if (!t.star_of_vertex(sorted.front()).has_face(t.simplex_of(sorted)) ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("star cluster of a face: the points do not span a face");
  }
  std::vector<int> x{1};
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) x.push_back(x.back() + sum(sorted[i + 1]) - sum(sorted[i]));
  return x;
}

Count sc_count_general_face(const Subdivision& t, const std::vector<LatticeVertex>& face) {
  return sc_count_offsets(t.k(), face_offsets(t, face));
}

}  // namespace edgewise
