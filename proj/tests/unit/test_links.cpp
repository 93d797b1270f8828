#include "oracles.hpp"

using namespace edgewise;
using oracle::cv;

namespace {

std::vector<int> parts(const Partition& p) { return p.parts(); }

}  // namespace

TEST_CASE("link of a three-vertex face in T_{8,9}") {
  const Subdivision t(8, 9);
  const std::vector<LatticeVertex> face{{2, 2, 3, 3, 4, 7, 8}, {1, 1, 3, 3, 3, 6, 7}, {2, 2, 3, 3, 3, 6, 8}};
  const auto fl = link_of_face(t, face, true, 200);
  CHECK(fl.index_sets == std::vector<std::vector<int>>{{1, 2, 7}, {5, 6}, {3, 4, 8}});
  CHECK(parts(fl.descriptor.lambda) == std::vector<int>{3, 3, 2});
  REQUIRE(fl.descriptor.sigma.size() == 3);
  CHECK(parts(fl.descriptor.sigma[0]) == std::vector<int>{2, 1});
  CHECK(parts(fl.descriptor.sigma[1]) == std::vector<int>{2, 1});
  CHECK(parts(fl.descriptor.sigma[2]) == std::vector<int>{1, 1});
  CHECK(fl.verified);
  CHECK(fl.ordered_face.front() == LatticeVertex{1, 1, 3, 3, 3, 6, 7});
  for (const auto& s : fl.descriptor.sigma) CHECK(s.size() <= t.q());
}

TEST_CASE("degenerate faces") {
  const Subdivision t(4, 3);
  const auto vs = t.decode({1, 0, 2});
  const auto full = link_of_face(t, vs);
  CHECK(full.link.dimension() == -1);
  CHECK(full.verified);
  CHECK(parts(full.descriptor.lambda) == std::vector<int>{1, 1, 1, 1});

  for (const auto& v : t.vertex_set()) {
    const auto d = classify_link_of_face(t, {v});
    CHECK(parts(d.lambda) == std::vector<int>{4});
    REQUIRE(d.sigma.size() == 1);
    CHECK(d.sigma[0] == t.vertex_partition(v));
    const auto fl = link_of_face(t, {v});
    CHECK(fl.verified);
    CHECK(oracle::facet_set(fl.link) == oracle::facet_set(t.link_of_vertex(v, false).link));
  }

  CHECK_THROWS_AS(link_of_face(t, {{0, 0, 0}, {2, 2, 2}}), DomainError);
  CHECK_THROWS_AS(link_of_face(t, {}), DomainError);
}

TEST_CASE("every face of small T_{k,q} matches its model") {
  for (int k = 2; k <= 4; ++k)
    for (int q = 1; q <= 4; ++q) {
      const Subdivision t(k, q);
      const auto K = t.build();
      for (int dim = 0; dim < k; ++dim)
        for (const auto& f : K.faces_of_dimension(dim)) {
          std::vector<LatticeVertex> pts;
          for (VertexId id : f) pts.push_back(t.vertex(id));
          const auto fl = link_of_face(t, pts);
          CHECK(fl.verified);
          CHECK(oracle::facet_set(fl.link) == oracle::facet_set(link(K, f)));
          for (const auto& s : fl.descriptor.sigma) CHECK(s.size() <= q);
        }
    }
}

TEST_CASE("face counts per link type") {
  // table order: by number of parts, then reverse-lex
  std::vector<Partition> order;
  for (int s = 1; s <= 6; ++s)
    for (const auto& p : partitions(6, s)) order.push_back(p);
  std::vector<Count> counts;
  for (const auto& p : order) counts.push_back(count_faces_with_link_type(6, 6, p));
  CHECK(counts == std::vector<Count>{6, 6, 6, 3, 6, 12, 2, 6, 9, 6, 1});
  CHECK(count_faces_with_link_type(6, 6, Partition({3, 2, 1})) == 12);
  CHECK(count_faces_with_link_type(6, 6, Partition({2, 2, 2})) == 2);
  CHECK(count_faces_with_link_type(6, 2, Partition({2, 2, 2})) == 0);

  // per part count the types add up to C(k, s) faces of the big simplex
  for (int k = 2; k <= 6; ++k)
    for (int s = 1; s <= k; ++s) {
      Count total = 0;
      for (const auto& p : partitions(k, s)) total += count_faces_with_link_type(k, k, p);
      CHECK(total == oracle::choose(k, s));
    }

  // brute force: group the vertices of T_{k,q} by the face of the big simplex
  // whose relative interior holds them and record the partition
  for (int k = 2; k <= 5; ++k)
    for (int q = 1; q <= 5; ++q) {
      const Subdivision t(k, q);
      std::map<std::vector<int>, std::set<std::vector<int>>> by_support;
      for (const auto& v : t.vertex_set()) {
        // barycentric coordinates y_0 = v_1, y_i = v_{i+1} - v_i, y_{k-1} = q - v_{k-1}
        std::vector<int> support;
        int prev = 0;
        for (int i = 0; i <= k - 1; ++i) {
          const int cur = i < k - 1 ? v[i] : q;
          if (cur - prev > 0) support.push_back(i);
          prev = cur;
        }
        by_support[support].insert(t.vertex_partition(v).parts());
      }
      std::map<std::vector<int>, Count> faces_of_type;
      for (const auto& [support, types] : by_support) {
        REQUIRE(types.size() == 1);  // one link type per open face
        faces_of_type[*types.begin()] += 1;
      }
      for (int s = 1; s <= k; ++s)
        for (const auto& beta : partitions(k, s)) {
          CAPTURE(k);
          CAPTURE(q);
          CAPTURE(to_string(beta.parts()));
          const Count expect = faces_of_type.count(beta.parts()) ? faces_of_type[beta.parts()] : Count(0);
          CHECK(count_faces_with_link_type(k, q, beta) == expect);
        }
      std::set<std::vector<int>> types;
      for (const auto& v : t.vertex_set()) types.insert(t.vertex_partition(v).parts());
      CHECK(count_link_types(k, q) == Count(types.size()));
    }
  CHECK(count_link_types(6, 6) == 11);
  CHECK(count_link_types(6, 9) == oracle::partition_count_dp(6));
}

TEST_CASE("Q_s and distinct link counts") {
  const std::vector<long long> qs{1, 3, 7, 16, 34, 74, 151, 312, 625, 1245};
  const std::vector<long long> links{2, 5, 12, 28, 62, 136, 287, 599, 1224, 2469};
  for (int s = 0; s <= 9; ++s) CHECK(q_sequence(s) == qs[s]);
  for (int m = 0; m <= 9; ++m) CHECK(count_distinct_links_dim(m) == links[m]);
  for (int m = 0; m <= 3; ++m) CHECK(count_link_types_of_faces(2 * m + 2, 2 * m + 2, m + 1) == count_distinct_links_dim(m));
  for (int k = 2; k <= 7; ++k) CHECK(count_link_types_of_faces(k, 3, k) == 1);
}

TEST_CASE("distinct links of faces by exhaustive classification") {
  // group all (t-1)-faces by link model up to isomorphism
  auto exhaustive = [](int k, int q, int t) {
    const Subdivision T(k, q);
    const auto K = T.build();
    std::map<LinkDescriptor, SimplicialComplex> seen;
    for (const auto& f : K.faces_of_dimension(t - 1)) {
      std::vector<LatticeVertex> pts;
      for (VertexId id : f) pts.push_back(T.vertex(id));
      const auto d = classify_link_of_face(T, pts);
      if (!seen.count(d)) seen.emplace(d, link(K, f));
    }
    std::vector<SimplicialComplex> reps;
    for (const auto& [d, l] : seen)
      if (std::none_of(reps.begin(), reps.end(), [&](const auto& r) { return are_isomorphic(r, l, 200); }))
        reps.push_back(l);
    return Count(reps.size());
  };
  CHECK(count_link_types_of_faces(4, 4, 2) == exhaustive(4, 4, 2));
  for (int k = 2; k <= 5; ++k)
    for (int q = 1; q <= 4; ++q)
      for (int t = 1; t <= k; ++t) {
        if (Subdivision(k, q).facet_count() > 300) continue;
        CAPTURE(k);
        CAPTURE(q);
        CAPTURE(t);
        CHECK(count_link_types_of_faces(k, q, t) == exhaustive(k, q, t));
      }
}

TEST_CASE("faces with the same descriptor have isomorphic links") {
  for (int k = 3; k <= 5; ++k) {
    const Subdivision t(k, k);
    const auto K = t.build();
    for (int dim = 0; dim < k - 1; ++dim) {
      std::map<LinkDescriptor, SimplicialComplex> by_desc;
      for (const auto& f : K.faces_of_dimension(dim)) {
        std::vector<LatticeVertex> pts;
        for (VertexId id : f) pts.push_back(t.vertex(id));
        const auto d = classify_link_of_face(t, pts);
        const auto l = link(K, f);
        auto [it, fresh] = by_desc.emplace(d, l);
        if (!fresh) CHECK(are_isomorphic(it->second, l, 200));
      }
    }
  }
}

TEST_CASE("link models") {
  LinkDescriptor d{Partition({3}), {Partition({1, 1, 1})}};
  CHECK(are_isomorphic(link_model(d), barycentric_boundary(3)));
  LinkDescriptor two{Partition({2, 1}), {Partition({1, 1}), Partition({1})}};
  const auto m = link_model(two);
  CHECK(m.num_vertices() == 2);
  CHECK(m.num_facets() == 2);
}
