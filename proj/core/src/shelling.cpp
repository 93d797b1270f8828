#include "edgewise/shelling.hpp"

#include <algorithm>
#include <numeric>

namespace edgewise {

FacetKey facet_key(const FacetCode& a) {
  require(!a.empty(), "facet_key: empty code");
  return {*std::max_element(a.begin(), a.end()), std::accumulate(a.begin(), a.end(), 0), a};
}

std::strong_ordering compare_facets(const FacetCode& a, const FacetCode& b) {
  require(a.size() == b.size(), "compare_facets: codes of different length");
  const FacetKey ka = facet_key(a), kb = facet_key(b);
  if (auto c = ka.max <=> kb.max; c != 0) return c;
  if (auto c = ka.sum <=> kb.sum; c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

Simplex restriction_rule(const Subdivision& t, const FacetCode& a) {
  const auto vs = t.decode(a);
  const int k = t.k();
  std::vector<VertexId> r;
  int prev = 0;
  for (int i = 1; i <= k - 1; ++i) {
    if (prev < a[i - 1]) r.push_back(t.id(vs[k - i]));  // v^{(k+1-i)}
    prev = a[i - 1];
  }
  return make_simplex(std::move(r));
}

ShellingReport shelling_order(const Subdivision& t, std::size_t max_facets) {
  ShellingReport r;
  r.codes = t.codes(max_facets);
  std::sort(r.codes.begin(), r.codes.end(), [](const auto& a, const auto& b) { return compare_facets(a, b) < 0; });
  std::vector<Simplex> order;
  order.reserve(r.codes.size());
  for (const auto& a : r.codes) {
    order.push_back(t.facet(a));
    r.rule_restrictions.push_back(restriction_rule(t, a));
  }
  r.certificate = verify_shelling(SimplicialComplex(order), order);
  r.restrictions_match = r.certificate.restrictions == r.rule_restrictions;
  return r;
}

int ascents(const FacetCode& a) {
  int n = 0, prev = 0;
  for (int x : a) {
    n += prev < x;
    prev = x;
  }
  return n;
}

CountVec h_by_ascents(int k, int q, std::size_t max_facets) {
  const Subdivision t(k, q);
  std::vector<std::uint64_t> h(k, 0);
  for (const auto& a : t.codes(max_facets)) ++h[ascents(a)];
  return to_counts(h);
}

CountVec h_by_recursion(int k, int q) {
  require(k >= 2 && q >= 1, "h_by_recursion: need k >= 2, q >= 1");
  // a[j][e]: sequences (0, a_1, ..., a_{t-2}, j) with e ascents; t = 2 first
  std::vector<CountVec> a(q, CountVec(k, Count(0)));
  for (int j = 0; j < q; ++j) a[j][j > 0 ? 1 : 0] = 1;
  for (int t = 3; t <= k; ++t) {
    std::vector<CountVec> next(q, CountVec(k, Count(0)));
    for (int j = 0; j < q; ++j)
      for (int e = 0; e < k; ++e) {
        Count v = 0;
        for (int p = 0; p < j; ++p)
          if (e >= 1) v += a[p][e - 1];
        for (int p = j; p < q; ++p) v += a[p][e];
        next[j][e] = v;
      }
    a = std::move(next);
  }
  CountVec h(k, Count(0));
  for (int j = 0; j < q; ++j)
    for (int e = 0; e < k; ++e) h[e] += a[j][e];
  return h;
}

CountVec h_closed_form(int k, int q) {
  require(k >= 2 && q >= 1, "h_closed_form: need k >= 2, q >= 1");
  CountVec h(k, Count(0));
  for (int i = 0; i < k; ++i) {
    Count v = 0;
    for (int j = 0; j <= i; ++j) {
      Count term = binomial(k, j) * binomial(static_cast<long long>(i - j) * q + k - 1, k - 1);
      if (j % 2) v -= term; else v += term;
    }
    h[i] = v;
  }
  return h;
}

CountVec h_by_polynomial(int k, int q) {
  require(k >= 2 && q >= 1, "h_by_polynomial: need k >= 2, q >= 1");
  const CountVec base(q, Count(1));
  CountVec p{1};
  for (int t = 0; t < k; ++t) p = convolve(p, base);
  CountVec h(k, Count(0));
  for (int i = 0; i < k; ++i) {
    const std::size_t e = static_cast<std::size_t>(i) * q;
    if (e < p.size()) h[i] = p[e];
  }
  return h;
}

Count h1_quoted_formula(int k, int q) { return binomial(k + q - 1, k - 1) - 1; }

HVectorReport h_vector_report(int k, int q, std::size_t max_facets, bool with_shelling) {
  HVectorReport r;
  r.k = k;
  r.q = q;
  const Subdivision t(k, q);
  r.recursion = h_by_recursion(k, q);
  r.closed_form = h_closed_form(k, q);
  r.polynomial = h_by_polynomial(k, q);
  r.h1_quoted = h1_quoted_formula(k, q);
  if (t.facet_count() <= Count(max_facets)) {
    r.ascents = h_by_ascents(k, q, max_facets);
    const CountVec full = h_vector(t.build(max_facets));
    // the top entry of a ball's h-vector vanishes; keep it in the comparison
    r.from_f = full[k] == 0 ? CountVec(full.begin(), full.end() - 1) : full;
    if (with_shelling) {
      const auto s = shelling_order(t, max_facets);
      if (s.certificate.valid) r.shelling = s.certificate.type_histogram(k);
    }
  }
  std::vector<const CountVec*> routes{&r.recursion, &r.closed_form, &r.polynomial};
  if (r.ascents) routes.push_back(&*r.ascents);
  if (r.from_f) routes.push_back(&*r.from_f);
  if (r.shelling) routes.push_back(&*r.shelling);
  // exhaustive ascents and the ascent recursion are one route
  r.routes = static_cast<int>(routes.size()) - (r.ascents ? 1 : 0);
  r.agree = std::all_of(routes.begin(), routes.end(), [&](const CountVec* v) { return *v == r.recursion; });
  if (with_shelling && r.ascents && !r.shelling) r.agree = false;
  return r;
}

}  // namespace edgewise
