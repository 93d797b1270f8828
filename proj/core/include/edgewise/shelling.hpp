#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "edgewise/complex.hpp"
#include "edgewise/subdivision.hpp"

namespace edgewise {

struct FacetKey {
  int max = 0;  // m(a)
  int sum = 0;  // S(a)
  FacetCode code;
};

FacetKey facet_key(const FacetCode& a);

/// m(a), then S(a), then at the first differing entry the larger entry
/// comes first.
std::strong_ordering compare_facets(const FacetCode& a, const FacetCode& b);

/// {v^{(k+1-i)} : a_{i-1} < a_i} with a_0 = 0, as vertex ids.
Simplex restriction_rule(const Subdivision& t, const FacetCode& a);

struct ShellingReport {
  std::vector<FacetCode> codes;  // in shelling order
  ShellingCertificate certificate;
  std::vector<Simplex> rule_restrictions;
  bool restrictions_match = false;  // certificate restrictions == rule, facet by facet
};

ShellingReport shelling_order(const Subdivision& t, std::size_t max_facets = kDefaultMaxFacets);

/// Number of ascents of (0, a_1, ..., a_{k-1}).
int ascents(const FacetCode& a);

// h(T_{k,q}) as h_0..h_{k-1}; the top entry h_k is always zero and omitted.
CountVec h_by_ascents(int k, int q, std::size_t max_facets = kDefaultMaxFacets);  // exhaustive
CountVec h_by_recursion(int k, int q);  // table a^{(t)}_{j,e}
CountVec h_closed_form(int k, int q);
CountVec h_by_polynomial(int k, int q);  // coefficient of x^{iq} in (1+...+x^{q-1})^k

/// The value C(k+q-1, k-1) - 1 sometimes quoted for h_1.
Count h1_quoted_formula(int k, int q);

struct HVectorReport {
  int k = 0;
  int q = 0;
  std::optional<CountVec> ascents;  // exhaustive routes are skipped past the budget
  CountVec recursion;
  CountVec closed_form;
  CountVec polynomial;
  std::optional<CountVec> from_f;   // h_from_f of the built complex, top entry dropped
  std::optional<CountVec> shelling;  // type histogram of the shelling certificate
  bool agree = false;               // every computed route gives the same vector
  int routes = 0;                   // independent routes compared (ascents counted once)
  Count h1_quoted;
};

/// with_shelling additionally runs verify_shelling (quadratic in facets).
HVectorReport h_vector_report(int k, int q, std::size_t max_facets = kDefaultMaxFacets, bool with_shelling = false);

}  // namespace edgewise
