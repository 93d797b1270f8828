#include "edgewise/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace edgewise {

Simplex make_simplex(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex set_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
    for (VertexId v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> faces) {
  for (auto& f : faces) f = make_simplex(std::move(f));
  // Larger faces first so that containment only needs to look backwards.
  std::sort(faces.begin(), faces.end(), [](const Simplex& x, const Simplex& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::vector<Simplex> kept;
  std::size_t larger = 0;  // kept[0, larger) are strictly larger than the current face
  for (auto& f : faces) {
    while (larger < kept.size() && kept[larger].size() > f.size()) ++larger;
    const bool dominated = std::any_of(kept.begin(), kept.begin() + static_cast<long>(larger),
                                       [&](const Simplex& g) { return is_subset(f, g); });
    if (!dominated) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  facets_ = std::move(kept);

  for (const auto& f : facets_) vertices_.insert(vertices_.end(), f.begin(), f.end());
  vertices_ = make_simplex(std::move(vertices_));
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::has_face(const Simplex& sigma) const {
  const Simplex s = make_simplex(sigma);
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return is_subset(s, f); });
}

bool SimplicialComplex::has_facet(const Simplex& sigma) const {
  return std::binary_search(facets_.begin(), facets_.end(), make_simplex(sigma));
}

const CountVec& SimplicialComplex::f_vector() const {
  std::call_once(cache_->once, [this] {
    if (facets_.empty()) return;
    const int d = dimension();
    std::vector<std::unordered_set<Simplex, SimplexHash>> seen(d + 2);
    for (const auto& f : facets_) {
      const std::size_t n = f.size();
      if (n > 24) throw CapacityError("f_vector: facet too large to enumerate its faces");
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Simplex sub;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) sub.push_back(f[i]);
        seen[sub.size()].insert(std::move(sub));
      }
    }
    cache_->f.reserve(d + 2);
    for (auto& s : seen) cache_->f.emplace_back(s.size());
  });
  return cache_->f;
}

Count SimplicialComplex::face_count(int dim) const {
  const auto& f = f_vector();
  if (dim + 1 < 0 || dim + 1 >= static_cast<int>(f.size())) return 0;
  return f[dim + 1];
}

std::vector<Simplex> SimplicialComplex::faces_of_dimension(int dim) const {
  std::unordered_set<Simplex, SimplexHash> seen;
  const std::size_t size = static_cast<std::size_t>(dim + 1);
  for (const auto& f : facets_) {
    if (f.size() < size) continue;
    // iterate size-subsets of f via a selector
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      Simplex sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (pick[i]) sub.push_back(f[i]);
      seen.insert(std::move(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::vector<Simplex> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

CountVec h_from_f(const CountVec& f, int d) {
  require(d >= -1, "h_from_f: dimension must be at least -1");
  require(f.size() == static_cast<std::size_t>(d) + 2, "h_from_f: f-vector length must be d+2");
  require(f[0] == 1, "h_from_f: f_{-1} must be 1");
  CountVec h(d + 2, Count(0));
  for (int s = 0; s <= d + 1; ++s) {
    Count acc = 0;
    for (int i = 0; i <= s; ++i) {
      Count term = binomial(d + 1 - i, d + 1 - s) * f[i];
      if ((s - i) % 2) acc -= term; else acc += term;
    }
    h[s] = acc;
  }
  return h;
}

CountVec h_vector(const SimplicialComplex& k) {
  require(!k.is_void(), "h_vector of the void complex");
  return h_from_f(k.f_vector(), k.dimension());
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
  const Simplex s = make_simplex(sigma);
  std::vector<Simplex> faces;
  for (const auto& f : k.facets())
    if (is_subset(s, f)) faces.push_back(set_difference(f, s));
  if (faces.empty()) throw DomainError("link: simplex is not a face of the complex");
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma) {
  const Simplex s = make_simplex(sigma);
  std::vector<Simplex> faces;
  for (const auto& f : k.facets())
    if (is_subset(s, f)) faces.push_back(f);
  if (faces.empty()) throw DomainError("star: simplex is not a face of the complex");
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex shifted(const SimplicialComplex& k, VertexId offset) {
  std::vector<Simplex> faces = k.facets();
  for (auto& f : faces)
    for (auto& v : f) v += offset;
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex relabeled(const SimplicialComplex& k, const std::map<VertexId, VertexId>& map) {
  std::vector<Simplex> faces = k.facets();
  for (auto& f : faces)
    for (auto& v : f) {
      auto it = map.find(v);
      require(it != map.end(), "relabeled: vertex missing from map");
      v = it->second;
    }
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) return SimplicialComplex();
  SimplicialComplex bb = b;
  if (!set_intersection(a.vertices(), b.vertices()).empty()) {
    const VertexId shift = a.vertices().back() - b.vertices().front() + 1;
    bb = shifted(b, shift);
  }
  std::vector<Simplex> faces;
  faces.reserve(a.num_facets() * bb.num_facets());
  for (const auto& x : a.facets())
    for (const auto& y : bb.facets()) faces.push_back(set_union(x, y));
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex complex_union(const std::vector<SimplicialComplex>& parts) {
  std::vector<Simplex> faces;
  for (const auto& p : parts) faces.insert(faces.end(), p.facets().begin(), p.facets().end());
  return SimplicialComplex(std::move(faces));
}

// ---------------------------------------------------------------------------

ShellingWitness ShellingCertificate::witness(std::size_t i, std::size_t j) const {
  require(valid, "witness: certificate is not valid");
  require(i < j && j < order.size(), "witness: need i < j within the order");
  for (VertexId v : restrictions[j]) {
    if (!std::binary_search(order[i].begin(), order[i].end(), v)) return {ridge_owner[j].at(v), v};
  }
  throw DomainError("witness: no vertex separates the pair");  // unreachable for valid certificates
}

CountVec ShellingCertificate::type_histogram(std::size_t length) const {
  CountVec h(length, Count(0));
  for (int t : types) {
    if (static_cast<std::size_t>(t) >= h.size()) h.resize(t + 1, Count(0));
    h[t] += 1;
  }
  return h;
}

ShellingCertificate verify_shelling(const SimplicialComplex& k, const std::vector<Simplex>& order) {
  require(!k.is_void(), "verify_shelling: void complex");
  require(k.is_pure(), "verify_shelling: complex is not pure");
  std::vector<Simplex> sorted_order;
  sorted_order.reserve(order.size());
  for (const auto& f : order) sorted_order.push_back(make_simplex(f));
  {
    auto check = sorted_order;
    std::sort(check.begin(), check.end());
    require(check == k.facets(), "verify_shelling: order is not a permutation of the facets");
  }

  ShellingCertificate cert;
  cert.order = sorted_order;
  const std::size_t n = sorted_order.size();
  cert.restrictions.resize(n);
  cert.types.resize(n);
  cert.ridge_owner.resize(n);

  // earliest position owning each ridge
  std::unordered_map<Simplex, std::size_t, SimplexHash> first_owner;
  for (std::size_t j = 0; j < n; ++j) {
    const Simplex& f = sorted_order[j];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Simplex ridge;
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != drop) ridge.push_back(f[t]);
      auto [it, inserted] = first_owner.emplace(std::move(ridge), j);
      if (!inserted && it->second < j) {
        cert.restrictions[j].push_back(f[drop]);
        cert.ridge_owner[j][f[drop]] = it->second;
      }
    }
    cert.types[j] = static_cast<int>(cert.restrictions[j].size());
  }

  cert.valid = true;
  for (std::size_t j = 1; j < n && cert.valid; ++j) {
    const Simplex& r = cert.restrictions[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (is_subset(r, sorted_order[i])) {
        cert.valid = false;
        cert.failure = std::make_pair(i, j);
        break;
      }
    }
  }
  return cert;
}

}  // namespace edgewise
