#include "oracles.hpp"

using namespace edgewise;
using oracle::cv;

TEST_CASE("facet order") {
  CHECK(compare_facets({0, 0}, {1, 0}) < 0);
  CHECK(compare_facets({1, 0}, {0, 1}) < 0);
  CHECK(compare_facets({0, 1}, {1, 1}) < 0);
  CHECK(compare_facets({1, 1}, {1, 1}) == 0);
  CHECK_THROWS_AS(compare_facets({1}, {1, 0}), DomainError);

  const Subdivision t(4, 3);
  const auto codes = t.codes();
  for (const auto& a : codes) {
    CHECK(compare_facets(std::vector<int>(3, 0), a) <= 0);
    for (const auto& b : codes) {
      CHECK((compare_facets(a, b) == 0) == (a == b));
      CHECK((compare_facets(a, b) < 0) == (compare_facets(b, a) > 0));
      for (const auto& c : codes)
        if (compare_facets(a, b) < 0 && compare_facets(b, c) < 0) CHECK(compare_facets(a, c) < 0);
    }
  }
}

TEST_CASE("global shelling") {
  const auto r23 = shelling_order(Subdivision(2, 3));
  CHECK(r23.codes == std::vector<FacetCode>{{0}, {1}, {2}});
  CHECK(r23.certificate.types == std::vector<int>{0, 1, 1});

  const auto r32 = shelling_order(Subdivision(3, 2));
  CHECK(r32.codes == std::vector<FacetCode>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(r32.certificate.types == std::vector<int>{0, 1, 1, 1});
  CHECK(r32.certificate.type_histogram(3) == cv({1, 3, 0}));

  for (int k = 2; k <= 5; ++k)
    for (int q = 1; q <= 4; ++q) {
      CAPTURE(k);
      CAPTURE(q);
      const Subdivision t(k, q);
      const auto r = shelling_order(t);
      CHECK(r.certificate.valid);
      CHECK(r.restrictions_match);
      CHECK(r.certificate.restrictions == oracle::restrictions_brute(r.certificate.order));
      for (std::size_t i = 0; i < r.codes.size(); ++i) CHECK(r.certificate.types[i] == ascents(r.codes[i]));
    }
  CHECK(oracle::is_shelling_brute(shelling_order(Subdivision(4, 3)).certificate.order));
}

TEST_CASE("h-vector routes") {
  CHECK(h_by_ascents(3, 2) == cv({1, 3, 0}));
  CHECK(h_closed_form(3, 2) == cv({1, 3, 0}));
  CHECK(h_by_polynomial(3, 2) == cv({1, 3, 0}));
  CHECK(h_by_recursion(3, 2) == cv({1, 3, 0}));
  CHECK(h_by_polynomial(4, 1) == cv({1, 0, 0, 0}));
  for (int q = 1; q <= 6; ++q) CHECK(h_by_polynomial(2, q)[1] == q - 1);

  for (int k = 2; k <= 6; ++k)
    for (int q = 1; q <= 4; ++q) {
      CAPTURE(k);
      CAPTURE(q);
      const auto a = h_by_ascents(k, q);
      CHECK(a[0] == 1);
      CHECK(h_closed_form(k, q) == a);
      CHECK(h_by_polynomial(k, q) == a);
      CHECK(h_by_recursion(k, q) == a);
      auto f = oracle::h_from_f(Subdivision(k, q).build().f_vector());
      CHECK(f.back() == 0);
      f.pop_back();
      CHECK(f == a);
      Count sum = 0;
      for (const auto& h : a) sum += h;
      CHECK(sum == boost::multiprecision::pow(Count(q), k - 1));
    }

  for (int k = 2; k <= 8; ++k)
    for (int q = 1; q <= 6; ++q) {
      const auto c = h_closed_form(k, q);
      CHECK(h_by_polynomial(k, q) == c);
      CHECK(h_by_recursion(k, q) == c);
      CHECK(c[k - 1] == oracle::choose(q - 1, k - 1));
      if (q == 2)
        for (int i = 0; i < k; ++i) CHECK(c[i] == oracle::choose(k, 2 * i));
    }
}

TEST_CASE("h-vector report") {
  const auto r = h_vector_report(3, 2, kDefaultMaxFacets, true);
  CHECK(r.agree);
  CHECK(r.routes == 5);
  CHECK(r.recursion == cv({1, 3, 0}));
  CHECK(r.h1_quoted == 5);
  CHECK(r.recursion[1] != r.h1_quoted);

  const auto big = h_vector_report(9, 8, 1000);
  CHECK(big.agree);
  CHECK(big.routes == 3);
  CHECK_FALSE(big.ascents.has_value());
}
