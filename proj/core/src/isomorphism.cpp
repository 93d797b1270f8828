#include <algorithm>
#include <map>
#include <numeric>

#include "edgewise/complex.hpp"

namespace edgewise {

namespace {

// Dense re-indexing of a complex: vertices 0..n-1, facets as index lists.
struct Indexed {
  std::vector<VertexId> ids;
  std::vector<std::vector<int>> facets;
  std::vector<std::vector<int>> facets_of;  // per vertex
  std::vector<int> co_occurrence;           // n*n: facets containing both

  explicit Indexed(const SimplicialComplex& k) : ids(k.vertices()) {
    const int n = static_cast<int>(ids.size());
    facets_of.resize(n);
    co_occurrence.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& f : k.facets()) {
      std::vector<int> idx;
      for (VertexId v : f) idx.push_back(static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
      const int fi = static_cast<int>(facets.size());
      for (int a : idx) {
        facets_of[a].push_back(fi);
        for (int b : idx) ++co_occurrence[static_cast<std::size_t>(a) * n + b];
      }
      facets.push_back(std::move(idx));
    }
  }
  int n() const { return static_cast<int>(ids.size()); }
  int co(int a, int b) const { return co_occurrence[static_cast<std::size_t>(a) * n() + b]; }
};

// Colour refinement on the vertex/facet incidence structure, run on both
// complexes with one shared dictionary so colours are comparable.
bool refine(const Indexed& a, const Indexed& b, std::vector<int>& col_a, std::vector<int>& col_b) {
  auto initial = [](const Indexed& x) {
    std::vector<std::vector<long>> sig(x.n());
    for (int v = 0; v < x.n(); ++v) {
      int degree = 0;
      for (int u = 0; u < x.n(); ++u) degree += (u != v && x.co(v, u) > 0);
      std::vector<long> sizes;
      for (int f : x.facets_of[v]) sizes.push_back(static_cast<long>(x.facets[f].size()));
      std::sort(sizes.begin(), sizes.end());
      sig[v] = {degree};
      sig[v].insert(sig[v].end(), sizes.begin(), sizes.end());
    }
    return sig;
  };
  auto assign = [](const std::vector<std::vector<long>>& sa, const std::vector<std::vector<long>>& sb,
                   std::vector<int>& ca, std::vector<int>& cb) {
    std::map<std::vector<long>, int> dict;
    for (const auto& s : sa) dict.emplace(s, 0);
    for (const auto& s : sb) dict.emplace(s, 0);
    int next = 0;
    for (auto& [s, c] : dict) c = next++;
    ca.resize(sa.size());
    cb.resize(sb.size());
    for (std::size_t i = 0; i < sa.size(); ++i) ca[i] = dict[sa[i]];
    for (std::size_t i = 0; i < sb.size(); ++i) cb[i] = dict[sb[i]];
    return next;
  };
  auto histogram = [](const std::vector<int>& c) {
    auto h = c;
    std::sort(h.begin(), h.end());
    return h;
  };

  int classes = assign(initial(a), initial(b), col_a, col_b);
  if (histogram(col_a) != histogram(col_b)) return false;
  for (;;) {
    auto step = [](const Indexed& x, const std::vector<int>& col) {
      std::vector<std::vector<long>> facet_sig(x.facets.size());
      for (std::size_t f = 0; f < x.facets.size(); ++f) {
        for (int v : x.facets[f]) facet_sig[f].push_back(col[v]);
        std::sort(facet_sig[f].begin(), facet_sig[f].end());
      }
      std::vector<std::vector<long>> sig(x.n());
      for (int v = 0; v < x.n(); ++v) {
        std::vector<std::vector<long>> around;
        for (int f : x.facets_of[v]) around.push_back(facet_sig[f]);
        std::sort(around.begin(), around.end());
        sig[v] = {col[v]};
        for (const auto& s : around) {
          sig[v].push_back(-1);
          sig[v].insert(sig[v].end(), s.begin(), s.end());
        }
      }
      return sig;
    };
    std::vector<int> na, nb;
    const int next = assign(step(a, col_a), step(b, col_b), na, nb);
    if (histogram(na) != histogram(nb)) return false;
    col_a = std::move(na);
    col_b = std::move(nb);
    if (next == classes) return true;
    classes = next;
  }
}

class Matcher {
 public:
  Matcher(const Indexed& a, const Indexed& b, std::vector<int> col_a, std::vector<int> col_b)
      : a_(a), b_(b), col_a_(std::move(col_a)), col_b_(std::move(col_b)),
        image_(a.n(), -1), used_(b.n(), false) {
    for (const auto& f : b.facets) {
      std::vector<int> s = f;
      std::sort(s.begin(), s.end());
      b_facets_.push_back(std::move(s));
    }
    std::sort(b_facets_.begin(), b_facets_.end());
    order_ = search_order();
  }

  bool run() { return extend(0); }
  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> search_order() const {
    const int n = a_.n();
    const int colours = col_a_.empty() ? 0 : *std::max_element(col_a_.begin(), col_a_.end()) + 1;
    std::vector<int> class_size(colours, 0);
    for (int c : col_a_) ++class_size[c];
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] && class_size[col_a_[v]] < class_size[col_a_[best]]))
          best = v;
      }
      placed[best] = true;
      order.push_back(best);
      for (int u = 0; u < n; ++u)
        if (u != best && a_.co(best, u) > 0) ++links[u];
    }
    return order;
  }

  bool consistent(int depth, int va, int vb) const {
    if (col_a_[va] != col_b_[vb]) return false;
    for (int i = 0; i < depth; ++i) {
      const int ua = order_[i];
      if (a_.co(va, ua) != b_.co(vb, image_[ua])) return false;
    }
    return true;
  }

  bool facets_match() const {
    std::vector<std::vector<int>> mapped;
    mapped.reserve(a_.facets.size());
    for (const auto& f : a_.facets) {
      std::vector<int> s;
      for (int v : f) s.push_back(image_[v]);
      std::sort(s.begin(), s.end());
      mapped.push_back(std::move(s));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b_facets_;
  }

  bool extend(int depth) {
    if (depth == a_.n()) return facets_match();
    const int va = order_[depth];
    for (int vb = 0; vb < b_.n(); ++vb) {
      if (used_[vb] || !consistent(depth, va, vb)) continue;
      image_[va] = vb;
      used_[vb] = true;
      if (extend(depth + 1)) return true;
      used_[vb] = false;
      image_[va] = -1;
    }
    return false;
  }

  const Indexed& a_;
  const Indexed& b_;
  std::vector<int> col_a_, col_b_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> b_facets_;
  std::vector<int> order_;
};

}  // namespace

IsomorphismResult find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                   std::size_t vertex_bound) {
  IsomorphismResult result;
  if (a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets()) return result;
  if (a.is_void() || b.is_void()) {
    result.isomorphic = a.is_void() && b.is_void();
    return result;
  }
  {
    auto sizes = [](const SimplicialComplex& k) {
      std::vector<std::size_t> s;
      for (const auto& f : k.facets()) s.push_back(f.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    if (sizes(a) != sizes(b)) return result;
  }
  if (a.f_vector() != b.f_vector()) return result;
  if (a.num_vertices() > vertex_bound) {
    throw CapacityError("isomorphism search: " + std::to_string(a.num_vertices()) +
                        " vertices exceeds the bound of " + std::to_string(vertex_bound));
  }

  const Indexed ia(a), ib(b);
  std::vector<int> col_a, col_b;
  if (!refine(ia, ib, col_a, col_b)) return result;
  Matcher m(ia, ib, std::move(col_a), std::move(col_b));
  if (!m.run()) return result;
  result.isomorphic = true;
  for (int v = 0; v < ia.n(); ++v) result.mapping[ia.ids[v]] = ib.ids[m.image()[v]];
  return result;
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b, std::size_t vertex_bound) {
  return find_isomorphism(a, b, vertex_bound).isomorphic;
}

}  // namespace edgewise
