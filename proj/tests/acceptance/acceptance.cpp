// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <edgewise/edgewise.hpp>

using namespace edgewise;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Check = std::function<void(Outcome&)>;

int run(int id, const std::string& name, double budget_s, const Check& check) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    check(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > budget_s) {
    std::ostringstream os;
    os << "over time budget " << budget_s << " s";
    out.fail(os.str());
  }
  std::printf("%s [%2d] %-58s %7.2f s%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  return out.ok ? 0 : 1;
}

std::string at(int k, int q) { return "k=" + std::to_string(k) + " q=" + std::to_string(q); }

Count sum(const CountVec& v) {
  Count s = 0;
  for (const auto& x : v) s += x;
  return s;
}

void facet_counts(Outcome& o) {
  for (int k = 2; k <= 6; ++k)
    for (int q = 1; q <= 4; ++q) {
      const auto K = Subdivision(k, q).build();
      if (Count(K.num_facets()) != boost::multiprecision::pow(Count(q), k - 1)) o.fail(at(k, q));
    }
}

void h_four_way(Outcome& o) {
  for (int k = 2; k <= 6; ++k)
    for (int q = 1; q <= 4; ++q) {
      const auto a = h_by_ascents(k, q);
      auto f = h_vector(Subdivision(k, q).build());
      if (f.back() != 0) o.fail("h_k nonzero at " + at(k, q));
      f.pop_back();
      if (h_closed_form(k, q) != a || h_by_polynomial(k, q) != a || f != a) o.fail(at(k, q));
    }
}

void global_shelling(Outcome& o) {
  for (int k = 2; k <= 5; ++k)
    for (int q = 1; q <= 4; ++q) {
      const auto r = shelling_order(Subdivision(k, q));
      if (!r.certificate.valid) o.fail("invalid shelling at " + at(k, q));
      if (!r.restrictions_match) o.fail("restriction mismatch at " + at(k, q));
    }
}

void tables(Outcome& o) {
  std::vector<Count> faces;
  for (int s = 1; s <= 6; ++s)
    for (const auto& p : partitions(6, s)) faces.push_back(count_faces_with_link_type(6, 6, p));
  if (faces != std::vector<Count>{6, 6, 6, 3, 6, 12, 2, 6, 9, 6, 1}) o.fail("k=6 face table");
  const std::vector<long long> qs{1, 3, 7, 16, 34, 74, 151, 312, 625, 1245};
  const std::vector<long long> links{2, 5, 12, 28, 62, 136, 287, 599, 1224, 2469};
  for (int s = 0; s <= 9; ++s)
    if (q_sequence(s) != qs[s]) o.fail("Q_" + std::to_string(s));
  for (int m = 0; m <= 9; ++m)
    if (count_distinct_links_dim(m) != links[m]) o.fail("links m=" + std::to_string(m));
}

void vertex_links(Outcome& o) {
  for (int k = 2; k <= 5; ++k) {
    const auto sd = barycentric_boundary(k);
    for (int q = 1; q <= 4; ++q) {
      const Subdivision t(k, q);
      for (const auto& v : t.vertex_set()) {
        const auto l = t.link_of_vertex(v, true);
        if (!l.verified) o.fail("link != K_lambda at " + at(k, q) + " v=" + to_string(v));
        if (t.is_interior(v) && !are_isomorphic(l.link, sd)) o.fail("interior link at " + at(k, q));
      }
    }
  }
}

void k_lambda_identities(Outcome& o) {
  for (int k = 2; k <= 6; ++k) {
    const auto ps = partitions(k);
    for (const auto& lambda : ps) {
      const auto d = h_k_lambda_descents(lambda);
      const std::string tag = "lambda=" + to_string(lambda.parts());
      if (h_k_lambda_recursive(lambda) != d || h_k_lambda_from_f(lambda) != d) o.fail(tag);
      const auto ln = h_k_lambda_last_nonzero(lambda);
      if (ln.index != k - lambda.largest() || d[ln.index] != ln.value) o.fail("last nonzero " + tag);
      for (int i = ln.index + 1; i < k; ++i)
        if (d[i] != 0) o.fail("last nonzero " + tag);
      if (lambda.size() == 2 && h_two_part(lambda) != d) o.fail("two-part " + tag);
    }
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (are_isomorphic(k_lambda(ps[i]), k_lambda(ps[j]))) o.fail("isomorphic K_lambda for k=" + std::to_string(k));
  }
}

void star_clusters(Outcome& o) {
  for (int k = 2; k <= 4; ++k) {
    const int q = k + 3;
    const Subdivision t(k, q);
    const auto r = sc_shelling_and_h(t, default_star_cluster_base(k, q));
    const auto K = t.build();
    const Count brute = star_cluster(K, t.simplex_of(r.vertices)).num_facets();
    const std::string tag = "k=" + std::to_string(k);
    if (r.count_enumerated != r.x_next || brute != r.x_next || r.count_ie != r.x_next || r.count_partition != r.x_next)
      o.fail("counts " + tag);
    if (!r.certificate.valid) o.fail("shelling " + tag);
    if (r.h_types != r.h_formula || r.h_types != r.h_from_f || sum(r.h_types) != r.x_next) o.fail("h " + tag);
    if (k == 3 && (r.x_next != 13 || r.h_types != CountVec{1, 9, 3, 0})) o.fail("k=3 instance");
  }
}

void h_matrix_machinery(Outcome& o) {
  for (int k = 1; k <= 7; ++k) {
    const auto h = h_matrix(k);
    const std::string tag = "k=" + std::to_string(k);
    if (h.column_sums() != eulerian_row(k)) o.fail("column sums " + tag);
    // Eulerian numbers by counting descents directly
    CountVec brute(k, Count(0));
    for (const auto& w : permutations(k)) brute[descent_count(w)] += 1;
    if (brute != eulerian_row(k)) o.fail("Eulerian " + tag);
    const auto x = x_sequence(k);
    const auto rows = h.row_sums();
    for (int t = 1; t <= k; ++t)
      if (rows[t - 1] != x[t - 1] * factorial(k - t)) o.fail("row sums " + tag);
    const auto rec = h_rows_recursive(k);
    for (int t = 1; t <= k; ++t)
      if (rec[t - 1] != h.row_for_init(t)) o.fail("recursion " + tag);
  }
}

void h1_discrepancy(Outcome& o) {
  const auto r = h_vector_report(3, 2, kDefaultMaxFacets, true);
  if (!r.agree) o.fail("routes disagree");
  if (r.recursion.size() < 2 || r.recursion[1] != 3) o.fail("h_1 != 3");
  if (r.h1_quoted != 5) o.fail("quoted formula != 5");
  if (r.recursion[1] == r.h1_quoted) o.fail("h_1 matches the quoted formula");
  if (o.ok) o.detail = "discrepancy flagged: computed h_1 = 3, quoted C(4,2)-1 = 5";
}

void properties(Outcome& o) {
  for (int k = 2; k <= 6; ++k)
    for (int q = 1; q <= 4; ++q) {
      const Subdivision t(k, q);
      for (const auto& a : t.codes()) {
        const auto vs = t.decode(a);
        Word pi;
        for (int i = 0; i + 1 < k; ++i)
          for (int c = 0; c < k - 1; ++c)
            if (vs[i + 1][c] != vs[i][c]) pi.insert(pi.begin(), c + 1);
        if (t.encode(vs[0], pi) != a) o.fail("round trip at " + at(k, q));
        const auto fa = t.facet(a);
        for (const auto& [d, b] : t.ridge_neighbors(a)) {
          const auto fb = t.facet(b);
          Simplex common;
          std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(common));
          if (static_cast<int>(common.size()) != k - 1) o.fail("ridge at " + at(k, q));
        }
      }
    }
  for (int k = 2; k <= 5; ++k)
    for (int q = 1; q <= 4; ++q) {
      const Subdivision t(k, q);
      const auto K = t.build();
      for (const auto& v : t.vertex_set()) {
        const Simplex s{t.id(v)};
        const auto st = star(K, s);
        if (join(SimplicialComplex::simplex(s), link(K, s)).facets() != st.facets()) o.fail("star != v*link at " + at(k, q));
        if (t.star_of_vertex(v).facets() != st.facets()) o.fail("local star at " + at(k, q));
      }
    }
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "facet count q^(k-1), k<=6, q<=4", 5, facet_counts);
  failures += run(2, "h-vector four-way agreement, k<=6, q<=4", 30, h_four_way);
  failures += run(3, "global shelling and restriction rule, k<=5, q<=4", 120, global_shelling);
  failures += run(4, "face-count, Q_s and distinct-link tables", 60, tables);
  failures += run(5, "vertex links ~ K_lambda, interior ~ Sd(boundary)", 120, vertex_links);
  failures += run(6, "K_lambda h routes, last entry, two-part, distinctness", 120, k_lambda_identities);
  failures += run(7, "star clusters k=2..4, q=k+3: counts, shelling, h", 60, star_clusters);
  failures += run(8, "H_k column/row sums and recursion, k<=7", 60, h_matrix_machinery);
  failures += run(9, "h_1 = 3 at k=3, q=2, quoted formula gives 5", 10, h1_discrepancy);
  failures += run(10, "round trip, ridge neighbours, star = v * link", 120, properties);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
