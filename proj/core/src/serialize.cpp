#include "edgewise/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace edgewise {

json envelope(const std::string& kind) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

json count_json(const Count& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

json counts_json(const CountVec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(count_json(c));
  return a;
}

json complex_json(const SimplicialComplex& k, const VertexLabeler& label) {
  auto lab = [&](VertexId v) { return label ? label(v) : json(v); };
  std::vector<json> facets;
  for (const auto& f : k.facets()) {
    std::vector<json> row;
    for (VertexId v : f) row.push_back(lab(v));
    std::sort(row.begin(), row.end());
    facets.emplace_back(row);
  }
  std::sort(facets.begin(), facets.end());
  json j;
  j["dimension"] = k.dimension();
  j["vertices"] = k.num_vertices();
  j["f_vector"] = k.is_void() ? json::array() : counts_json(k.f_vector());
  j["facets"] = facets;
  return j;
}

VertexLabeler lattice_labeler(const Subdivision& t) {
  return [&t](VertexId v) { return json(t.vertex(v)); };
}

json partition_json(const Partition& p) { return p.parts(); }

json poset_json(const GradedPoset& p) {
  json j;
  json elements = json::array();
  for (int x = 0; x < p.size(); ++x) {
    json e;
    e["id"] = x;
    e["rank"] = p.rank(x);
    if (p.is_chain_product()) e["coords"] = p.coords(x);
    elements.push_back(e);
  }
  json covers = json::array();
  for (const auto& c : p.covers()) {
    json e = json::array({c.lower, c.upper});
    if (p.labeled()) e.push_back(c.label);
    covers.push_back(e);
  }
  if (p.is_chain_product()) j["chain_lengths"] = p.chain_lengths();
  j["labeled"] = p.labeled();
  j["elements"] = elements;
  j["covers"] = covers;
  return j;
}

json descriptor_json(const LinkDescriptor& d) {
  json j;
  j["lambda"] = partition_json(d.lambda);
  json m = json::array();
  for (const auto& s : d.sigma) m.push_back(partition_json(s));
  j["M"] = m;
  return j;
}

json certificate_json(const ShellingCertificate& c, const VertexLabeler& label) {
  auto lab = [&](VertexId v) { return label ? label(v) : json(v); };
  auto simplex = [&](const Simplex& s) {
    json a = json::array();
    for (VertexId v : s) a.push_back(lab(v));
    return a;
  };
  json j;
  j["valid"] = c.valid;
  if (c.failure) j["failure"] = {c.failure->first, c.failure->second};
  json order = json::array(), restr = json::array();
  for (const auto& f : c.order) order.push_back(simplex(f));
  for (const auto& r : c.restrictions) restr.push_back(simplex(r));
  j["order"] = order;
  j["restrictions"] = restr;
  j["types"] = c.types;
  return j;
}

json h_report_json(const HVectorReport& r) {
  json j = envelope("hvector");
  j["k"] = r.k;
  j["q"] = r.q;
  json routes;
  if (r.ascents) routes["ascents"] = counts_json(*r.ascents);
  routes["recursion"] = counts_json(r.recursion);
  routes["closed_form"] = counts_json(r.closed_form);
  routes["polynomial"] = counts_json(r.polynomial);
  if (r.from_f) routes["h_from_f"] = counts_json(*r.from_f);
  if (r.shelling) routes["shelling_types"] = counts_json(*r.shelling);
  j["h"] = counts_json(r.recursion);
  j["routes"] = routes;
  j["routes_compared"] = r.routes;
  j["agree"] = r.agree;
  j["h1_quoted_formula"] = count_json(r.h1_quoted);
  j["h1_quoted_matches"] = r.recursion.size() > 1 && r.recursion[1] == r.h1_quoted;
  return j;
}

json star_cluster_json(const StarClusterReport& r, const Subdivision& t) {
  json j = envelope("star-cluster");
  j["k"] = r.k;
  j["q"] = r.q;
  j["base_facet"] = r.vertices;
  json layers = json::array();
  for (const auto& l : r.layers) {
    json e;
    e["j"] = l.j;
    e["new_facets"] = l.new_facets.size();
    e["permutations"] = l.new_permutations;
    layers.push_back(e);
  }
  j["layers"] = layers;
  j["facets"] = {{"enumerated", count_json(r.count_enumerated)},
                 {"inclusion_exclusion", count_json(r.count_ie)},
                 {"partition_formula", count_json(r.count_partition)},
                 {"X_k_plus_1", count_json(r.x_next)}};
  j["shelling_valid"] = r.certificate.valid;
  j["h"] = {{"types", counts_json(r.h_types)},
            {"init_weighted", counts_json(r.h_formula)},
            {"h_from_f", counts_json(r.h_from_f)}};
  j["certificate"] = certificate_json(r.certificate, lattice_labeler(t));
  return j;
}

std::string des_init_csv(const DescentInitTable& table) {
  std::ostringstream os;
  os << "init";
  for (int d = 0; d < table.k(); ++d) os << ",des" << d;
  os << '\n';
  for (int i = 1; i <= table.k(); ++i) {
    os << i;
    for (int d = 0; d < table.k(); ++d) os << ',' << table.count(i, d);
    os << '\n';
  }
  return os.str();
}

std::string off_text(const Subdivision& t, std::size_t max_facets) {
  const auto verts = t.vertex_set(max_facets * static_cast<std::size_t>(t.k()));
  const auto complex = t.build(max_facets);
  const int n = t.k() - 1;
  const int dim = std::max(3, n);
  std::ostringstream os;
  if (dim == 3) {
    os << "OFF\n";
  } else {
    os << "nOFF\n" << dim << '\n';
  }
  os << verts.size() << ' ' << complex.num_facets() << " 0\n";
  for (const auto& v : verts) {
    for (int i = 0; i < dim; ++i) os << (i ? " " : "") << (i < n ? v[i] : 0);
    os << '\n';
  }
  for (const auto& f : complex.facets()) {
    os << f.size();
    for (VertexId id : f) os << ' ' << id;
    os << '\n';
  }
  return os.str();
}

OffMesh parse_off(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!(in >> header)) throw DomainError("OFF: empty input");
  OffMesh mesh;
  if (header == "nOFF") {
    if (!(in >> mesh.dimension) || mesh.dimension < 1) throw DomainError("OFF: bad dimension");
  } else if (header != "OFF") {
    throw DomainError("OFF: unknown header '" + header + "'");
  }
  long long nv = 0, nf = 0, ne = 0;
  if (!(in >> nv >> nf >> ne) || nv < 0 || nf < 0) throw DomainError("OFF: bad counts line");
  mesh.vertices.resize(nv, std::vector<long long>(mesh.dimension));
  for (auto& v : mesh.vertices)
    for (auto& x : v)
      if (!(in >> x)) throw DomainError("OFF: truncated vertex list");
  mesh.faces.resize(nf);
  for (auto& f : mesh.faces) {
    long long size = 0;
    if (!(in >> size) || size < 0) throw DomainError("OFF: bad face size");
    f.resize(size);
    for (auto& x : f) {
      if (!(in >> x) || x < 0 || x >= nv) throw DomainError("OFF: bad face index");
    }
  }
  return mesh;
}

}  // namespace edgewise
