#include "oracles.hpp"

using namespace edgewise;

TEST_CASE("count encoding") {
  CHECK(count_json(Count(42)) == 42);
  CHECK(count_json(factorial(30)) == "265252859812191058636308480000000");
}

TEST_CASE("envelopes carry the schema") {
  const auto j = h_report_json(h_vector_report(3, 2));
  CHECK(j["schema"] == "edgewise/v1");
  CHECK(j["kind"] == "hvector");
  CHECK(j["h"] == json::array({1, 3, 0}));
  CHECK(j["h1_quoted_formula"] == 5);
  CHECK(j["h1_quoted_matches"] == false);
  CHECK(j.dump() == h_report_json(h_vector_report(3, 2)).dump());
}

TEST_CASE("descriptor and complex json") {
  const Subdivision t(3, 2);
  const auto c = complex_json(t.build(), lattice_labeler(t));
  CHECK(c["facets"].size() == 4);
  CHECK(c["f_vector"] == json::array({1, 6, 9, 4}));
  CHECK(c["facets"][0][0] == json::array({0, 0}));

  const LinkDescriptor d{Partition({3, 2}), {Partition({2, 1}), Partition({1, 1})}};
  CHECK(descriptor_json(d).dump() == R"({"lambda":[3,2],"M":[[2,1],[1,1]]})");

  const auto p = poset_json(r_label_product(chain_product({1, 1})));
  CHECK(p["elements"].size() == 4);
  CHECK(p["covers"][0].size() == 3);
}

TEST_CASE("des/init csv") {
  CHECK(des_init_csv(h_matrix(3)) == "init,des0,des1,des2\n1,1,1,0\n2,0,1,0\n3,0,2,1\n");
}

TEST_CASE("OFF export round trip") {
  const auto t32 = parse_off(off_text(Subdivision(3, 2)));
  CHECK(t32.vertices.size() == 6);
  CHECK(t32.faces.size() == 4);
  const auto t25 = parse_off(off_text(Subdivision(2, 5)));
  CHECK(t25.vertices.size() == 6);
  CHECK(t25.faces.size() == 5);

  for (int k = 2; k <= 6; ++k)
    for (int q = 1; q <= 3; ++q) {
      const Subdivision t(k, q);
      const auto mesh = parse_off(off_text(t));
      const auto vs = t.vertex_set();
      REQUIRE(mesh.vertices.size() == vs.size());
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (int c = 0; c < k - 1; ++c) CHECK(mesh.vertices[i][c] == vs[i][c]);
      std::set<Simplex> faces;
      for (const auto& f : mesh.faces) {
        Simplex s(f.begin(), f.end());
        std::sort(s.begin(), s.end());
        faces.insert(s);
      }
      CHECK(faces == oracle::facet_set(t.build()));
      CHECK(mesh.dimension == std::max(3, k - 1));
    }

  CHECK_THROWS_AS(parse_off("PLY\n"), DomainError);
  CHECK_THROWS_AS(parse_off("OFF\n2 1 0\n0 0 0\n1 1 1\n2 0 5\n"), DomainError);
  CHECK_THROWS_AS(parse_off("OFF\n2 1 0\n0 0 0\n"), DomainError);
}
