#include "edgewise/links.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace edgewise {

namespace {

struct FaceStructure {
  std::vector<LatticeVertex> ordered;
  Simplex ids;
  std::vector<std::vector<int>> index_sets;
  std::vector<Partition> sigma;
  SimplicialComplex lowest_star;
};

// Class sizes of the values of u on the indices of S, grouped by equality.
std::vector<int> run_classes(const LatticeVertex& u, const std::vector<int>& s) {
  std::map<int, int> by_value;
  for (int j : s) ++by_value[u[j - 1]];
  std::vector<int> sizes;
  for (const auto& [value, count] : by_value) sizes.push_back(count);
  return sizes;
}

FaceStructure analyse(const Subdivision& t, const std::vector<LatticeVertex>& face) {
  const int k = t.k();
  const int n = k - 1;
  require(!face.empty(), "link_of_face: the face is empty");
  require(static_cast<int>(face.size()) <= k, "link_of_face: a face has at most k vertices");
  FaceStructure fs;
  fs.ordered = face;
  auto sum = [](const LatticeVertex& v) { return std::accumulate(v.begin(), v.end(), 0); };
  for (const auto& v : face) t.id(v);  // validates membership in W_{k,q}
  std::sort(fs.ordered.begin(), fs.ordered.end(), [&](const auto& x, const auto& y) {
    return std::make_pair(sum(x), x) < std::make_pair(sum(y), y);
  });
  const int size = static_cast<int>(fs.ordered.size());

  std::vector<char> used(k + 1, 0);
  for (int i = 0; i + 1 < size; ++i) {
    std::vector<int> s;
    for (int j = 0; j < n; ++j) {
      const int d = fs.ordered[i + 1][j] - fs.ordered[i][j];
      if (d != 0 && d != 1) throw DomainError("link_of_face: the points do not span a face");
      if (d == 1) s.push_back(j + 1);
    }
    if (s.empty()) throw DomainError("link_of_face: repeated vertex");
    for (int j : s) used[j] = 1;
    fs.index_sets.push_back(std::move(s));
  }
  {
    // closing step from the highest vertex back to the lowest one
    for (int j = 0; j < n; ++j) {
      const int d = fs.ordered.front()[j] + 1 - fs.ordered.back()[j];
      if (d != 0 && d != 1) throw DomainError("link_of_face: the points do not span a face");
    }
    std::vector<int> s;
    for (int j = 1; j <= k; ++j)
      if (!used[j]) s.push_back(j);
    fs.index_sets.push_back(std::move(s));
  }

  fs.ids = t.simplex_of(fs.ordered);
  fs.lowest_star = t.star_of_vertex(fs.ordered.front());
  if (!fs.lowest_star.has_face(fs.ids)) throw DomainError("link_of_face: the points do not span a face");

  for (int i = 0; i + 1 < size; ++i)
    fs.sigma.push_back(Partition::normalized(run_classes(fs.ordered[i], fs.index_sets[i])));
  {
    // k, the zero coordinates and the q coordinates form one chain
    const auto& top = fs.ordered.back();
    std::vector<int> rest;
    int wrap = 0;
    for (int j : fs.index_sets.back()) {
      if (j == k || top[j - 1] == 0 || top[j - 1] == t.q()) {
        ++wrap;
      } else {
        rest.push_back(j);
      }
    }
    std::vector<int> sizes = run_classes(top, rest);
    sizes.push_back(wrap);
    fs.sigma.push_back(Partition::normalized(std::move(sizes)));
  }
  return fs;
}

LinkDescriptor describe(const std::vector<Partition>& sigma) {
  std::vector<std::pair<int, Partition>> parts;
  for (const auto& s : sigma) parts.emplace_back(s.total(), s);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  LinkDescriptor d;
  std::vector<int> lambda;
  for (auto& [size, s] : parts) {
    lambda.push_back(size);
    d.sigma.push_back(std::move(s));
  }
  d.lambda = Partition(std::move(lambda));
  return d;
}

}  // namespace

SimplicialComplex link_model(const LinkDescriptor& d) {
  SimplicialComplex out = SimplicialComplex::empty_complex();
  for (const auto& s : d.sigma) out = join(out, reduced_product_complex(s));
  return out;
}

FaceLink link_of_face(const Subdivision& t, const std::vector<LatticeVertex>& face, bool verify,
                      std::size_t iso_bound) {
  FaceStructure fs = analyse(t, face);
  FaceLink out;
  out.ordered_face = fs.ordered;
  out.index_sets = fs.index_sets;
  out.sigma = fs.sigma;
  out.descriptor = describe(fs.sigma);

  std::vector<GradedPoset> parts;
  for (const auto& s : fs.sigma) parts.push_back(r_label_product(chain_product(s.parts())));
  out.poset = stack_posets(parts, true);

  out.link = link(fs.lowest_star, fs.ids);
  out.model = link_model(out.descriptor);
  if (verify) {
    const SimplicialComplex face_star = star(fs.lowest_star, fs.ids);
    out.verified = are_isomorphic(out.link, out.model, iso_bound) &&
                   are_isomorphic(face_star, order_complex(out.poset, false), iso_bound);
  }
  return out;
}

LinkDescriptor classify_link_of_face(const Subdivision& t, const std::vector<LatticeVertex>& face) {
  return describe(analyse(t, face).sigma);
}

}  // namespace edgewise
