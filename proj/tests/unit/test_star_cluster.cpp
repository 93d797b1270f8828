#include "oracles.hpp"

using namespace edgewise;
using oracle::cv;

TEST_CASE("generic star cluster") {
  const SimplicialComplex b({{0, 1}, {1, 2}, {0, 2}});
  CHECK(star_cluster(b, {0, 1}).num_facets() == 3);
  CHECK(oracle::facet_set(star_cluster(b, {2})) == oracle::facet_set(star(b, {2})));
  CHECK_THROWS_AS(star_cluster(b, {0, 1, 2}), DomainError);
  CHECK_THROWS_AS(star_cluster(b, {}), DomainError);

  const Subdivision t(3, 7);
  const auto K = t.build();
  const auto f = t.facet(t.encode({1, 2}, {1, 2}));
  CHECK(star_cluster(K, f).num_facets() == 13);
}

TEST_CASE("init shelling of Sd(boundary)") {
  CHECK(init_shelling_order(3) == std::vector<Word>{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}});
  for (int k = 2; k <= 6; ++k) {
    const auto order = init_shelling_order(k);
    std::vector<Simplex> facets;
    for (const auto& pi : order) facets.push_back(sd_facet(pi));
    const auto sd = barycentric_boundary(k);
    CHECK(oracle::facet_set(SimplicialComplex(facets)) == oracle::facet_set(sd));
    const auto c = verify_shelling(sd, facets);
    REQUIRE(c.valid);
    for (std::size_t i = 0; i < order.size(); ++i) CHECK(c.types[i] == oracle::descents(order[i]));
    CHECK(c.type_histogram(k) == eulerian_row(k));
  }
}

TEST_CASE("phi relabelling") {
  CHECK(phi(1, {1, 2, 3}) == Word{1, 3, 2});
  CHECK(phi(3, {1, 2, 3}) == Word{3, 2, 1});
  CHECK(insert_top(2, {1, 2, 3}) == Word{2, 4, 1, 3});

  // Φ_j maps the permutations already seen before layer j onto init <= j-1
  for (int k = 2; k <= 5; ++k) {
    const Subdivision t(k, k + 2);
    const auto r = sc_facets_structured(t, default_star_cluster_base(k, k + 2));
    std::set<Simplex> seen;
    for (int j = 1; j <= k; ++j) {
      for (const auto& pi : permutations(k)) {
        const auto f = t.facet(t.star_code(r.vertices[j - 1], pi));
        CHECK(seen.count(f) == (faithful_initial_part(phi(j, pi)) <= j - 1 ? 1u : 0u));
      }
      for (const auto& f : r.layers[j - 1].new_facets) seen.insert(f);
    }
  }
}

TEST_CASE("structured layers") {
  const Subdivision t(3, 6);
  const auto r = sc_facets_structured(t, default_star_cluster_base(3, 6));
  REQUIRE(r.layers.size() == 3);
  CHECK(r.layers[0].new_facets.size() == 6);
  CHECK(r.layers[1].new_facets.size() == 4);
  CHECK(r.layers[2].new_facets.size() == 3);

  const auto r2 = sc_facets_structured(Subdivision(2, 4), default_star_cluster_base(2, 4));
  CHECK(r2.layers[0].new_facets.size() == 2);
  CHECK(r2.layers[1].new_facets.size() == 1);

  // pairwise overlaps of the vertex stars
  for (int k = 2; k <= 5; ++k) {
    const Subdivision s(k, k + 2);
    const auto rep = sc_facets_structured(s, default_star_cluster_base(k, k + 2));
    std::vector<std::set<Simplex>> stars;
    for (const auto& v : rep.vertices) stars.push_back(oracle::facet_set(s.star_of_vertex(v)));
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        std::size_t common = 0;
        for (const auto& f : stars[i - 1]) common += stars[j - 1].count(f);
        CHECK(Count(common) == oracle::fact(j - i) * oracle::fact(k - j + i));
      }
  }

  CHECK_THROWS_AS(default_star_cluster_base(4, 4), DomainError);
  CHECK_THROWS_AS(sc_facets_structured(Subdivision(3, 6), {0, 2}), DomainError);
  CHECK_THROWS_AS(sc_facets_structured(Subdivision(3, 6), {2, 2}), DomainError);
  CHECK_THROWS_AS(sc_facets_structured(Subdivision(3, 6), {1, 5}), DomainError);
}

TEST_CASE("star cluster counts") {
  CHECK(sc_count_ie(2) == 3);
  CHECK(sc_count_ie(3) == 13);
  CHECK(sc_count_partition(3) == 13);
  const auto x = x_sequence(9);
  for (int k = 2; k <= 8; ++k) {
    CHECK(sc_count_ie(k) == x[k]);
    CHECK(sc_count_partition(k) == x[k]);
  }
  for (int k = 2; k <= 5; ++k) {
    const Subdivision t(k, k + 2);
    const auto K = t.build();
    const auto r = sc_facets_structured(t, default_star_cluster_base(k, k + 2));
    CHECK(r.count_enumerated == x[k]);
    CHECK(oracle::facet_set(star_cluster(K, t.simplex_of(r.vertices))).size() == r.count_enumerated);
  }
}

TEST_CASE("star cluster of general faces") {
  const Subdivision t(3, 7);
  const auto K = t.build();
  CHECK(sc_count_general_face(t, {{2, 4}}) == 6);
  CHECK(sc_count_offsets(4, {1, 2, 3, 4}) == sc_count_ie(4));

  for (int k = 3; k <= 4; ++k) {
    const Subdivision s(k, k + 4);
    const auto Ks = s.build();
    for (int dim = 0; dim < k; ++dim)
      for (const auto& f : Ks.faces_of_dimension(dim)) {
        std::vector<LatticeVertex> pts;
        bool interior = true;
        for (VertexId id : f) {
          pts.push_back(s.vertex(id));
          interior = interior && s.is_interior(pts.back());
        }
        if (!interior) {
          CHECK_THROWS_AS(sc_count_general_face(s, pts), DomainError);
          continue;
        }
        CHECK(sc_count_general_face(s, pts) == Count(star_cluster(Ks, f).num_facets()));
      }
  }
  CHECK_THROWS_AS(sc_count_general_face(t, {{1, 2}, {3, 4}}), DomainError);
}

TEST_CASE("star cluster shelling and h") {
  const auto r3 = sc_shelling_and_h(Subdivision(3, 6), default_star_cluster_base(3, 6));
  CHECK(r3.certificate.valid);
  CHECK(r3.h_types == cv({1, 9, 3, 0}));
  CHECK(r3.h_formula == cv({1, 9, 3, 0}));
  CHECK(r3.h_from_f == cv({1, 9, 3, 0}));

  const auto r2 = sc_shelling_and_h(Subdivision(2, 3), default_star_cluster_base(2, 3));
  CHECK(r2.h_types == cv({1, 2, 0}));

  for (int k = 2; k <= 5; ++k) {
    const auto r = sc_shelling_and_h(Subdivision(k, k + 3), default_star_cluster_base(k, k + 3));
    CHECK(r.certificate.valid);
    CHECK(oracle::is_shelling_brute(r.order));
    CHECK(r.h_types == r.h_formula);
    CHECK(r.h_types == r.h_from_f);
    CHECK(r.h_types[0] == 1);
    Count sum = 0;
    for (const auto& h : r.h_types) sum += h;
    CHECK(sum == r.x_next);
    // h_j = Σ init(π) over π with des(π) = j
    CountVec weighted(k + 1, Count(0));
    for (const auto& w : oracle::all_perms(k)) weighted[oracle::descents(w)] += oracle::init(w);
    CHECK(r.h_types == weighted);
  }
}
