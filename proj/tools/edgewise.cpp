// Command-line front end for the edgewise library.
//
// Exit codes: 0 ok, 1 a checked invariant failed, 2 usage error,
// 3 capacity exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <edgewise/edgewise.hpp>

namespace fs = std::filesystem;
using namespace edgewise;

namespace {

enum Exit { kOk = 0, kInvariant = 1, kUsage = 2, kCapacity = 3 };

struct RunConfig {
  int k = 3;
  int q = 2;
  std::string format = "text";
  std::string out;
  std::size_t max_facets = kDefaultMaxFacets;
};

// Thrown when a computed certificate or cross-check fails.
struct InvariantBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw DomainError("not an integer list: '" + text + "'");
    }
    if (pos != item.size()) throw DomainError("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

void need_format(const RunConfig& c, std::initializer_list<const char*> allowed, const std::string& verb) {
  for (const char* f : allowed)
    if (c.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw DomainError(verb + ": --format must be one of " + list);
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + c.out + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + c.out + " failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_row(const std::string& head, const CountVec& v) {
  std::string s = head;
  for (const auto& x : v) s += "," + x.str();
  return s + "\n";
}

std::string parts_text(const Partition& p) {
  std::string s;
  for (int x : p.parts()) s += std::to_string(x);
  return s;
}

void check_budget(const Subdivision& t, const RunConfig& c) {
  if (t.facet_count() > Count(c.max_facets)) {
    throw CapacityError("T_{" + std::to_string(t.k()) + "," + std::to_string(t.q()) + "} has " +
                        t.facet_count().str() + " facets, over --max-facets " + std::to_string(c.max_facets));
  }
}

// ---------------------------------------------------------------------------

int cmd_build(const RunConfig& c) {
  need_format(c, {"text", "json"}, "build");
  const Subdivision t(c.k, c.q);
  check_budget(t, c);
  const auto verts = t.vertex_set();
  const auto codes = t.codes(c.max_facets);
  if (c.format == "json") {
    json j = envelope("build");
    j["k"] = c.k;
    j["q"] = c.q;
    j["vertices"] = verts;
    json facets = json::array();
    for (const auto& a : codes) facets.push_back({{"code", a}, {"vertices", t.facet(a)}});
    j["facets"] = facets;
    j["f_vector"] = counts_json(t.build(c.max_facets).f_vector());
    emit(c, dump(j));
    return kOk;
  }
  std::ostringstream os;
  os << "T_{" << c.k << "," << c.q << "}: " << verts.size() << " vertices, " << codes.size() << " facets\n";
  os << "f = " << to_string(t.build(c.max_facets).f_vector()) << "\n";
  os << "vertices\n";
  for (std::size_t i = 0; i < verts.size(); ++i) os << "  " << i << " " << to_string(verts[i]) << "\n";
  os << "facets\n";
  for (const auto& a : codes) {
    os << "  " << to_string(a) << " ->";
    for (VertexId v : t.facet(a)) os << " " << v;
    os << "\n";
  }
  emit(c, os.str());
  return kOk;
}

int cmd_hvector(const RunConfig& c, bool with_shelling) {
  need_format(c, {"text", "json", "csv"}, "hvector");
  const auto r = h_vector_report(c.k, c.q, c.max_facets, with_shelling);
  if (c.format == "json") {
    emit(c, dump(h_report_json(r)));
  } else if (c.format == "csv") {
    std::string s = "route";
    for (int i = 0; i < c.k; ++i) s += ",h" + std::to_string(i);
    s += "\n";
    if (r.ascents) s += csv_row("ascents", *r.ascents);
    s += csv_row("recursion", r.recursion);
    s += csv_row("closed_form", r.closed_form);
    s += csv_row("polynomial", r.polynomial);
    if (r.from_f) s += csv_row("h_from_f", *r.from_f);
    if (r.shelling) s += csv_row("shelling_types", *r.shelling);
    emit(c, s);
  } else {
    std::ostringstream os;
    os << "h(T_{" << c.k << "," << c.q << "}) = " << to_string(r.recursion) << "\n";
    if (r.ascents) os << "  ascents        " << to_string(*r.ascents) << "\n";
    os << "  recursion      " << to_string(r.recursion) << "\n";
    os << "  closed form    " << to_string(r.closed_form) << "\n";
    os << "  polynomial     " << to_string(r.polynomial) << "\n";
    if (r.from_f) os << "  h from f       " << to_string(*r.from_f) << "\n";
    if (r.shelling) os << "  shelling types " << to_string(*r.shelling) << "\n";
    if (!r.ascents) os << "  (exhaustive routes skipped: over --max-facets)\n";
    os << r.routes << " routes " << (r.agree ? "agree" : "DISAGREE") << "\n";
    if (r.recursion.size() > 1 && r.recursion[1] != r.h1_quoted) {
      os << "note: h_1 = " << r.recursion[1].str() << " differs from the quoted C(k+q-1,k-1)-1 = " << r.h1_quoted.str()
         << "\n";
    }
    emit(c, os.str());
  }
  if (!r.agree) throw InvariantBreach("h-vector routes disagree");
  return kOk;
}

int cmd_shell(const RunConfig& c) {
  need_format(c, {"text", "json"}, "shell");
  const Subdivision t(c.k, c.q);
  check_budget(t, c);
  const auto r = shelling_order(t, c.max_facets);
  if (c.format == "json") {
    json j = envelope("shell");
    j["k"] = c.k;
    j["q"] = c.q;
    j["codes"] = r.codes;
    j["restrictions_match_rule"] = r.restrictions_match;
    j["type_histogram"] = counts_json(r.certificate.type_histogram(c.k));
    j["certificate"] = certificate_json(r.certificate);
    emit(c, dump(j));
  } else {
    std::ostringstream os;
    os << "shelling of T_{" << c.k << "," << c.q << "}: " << (r.certificate.valid ? "valid" : "INVALID") << "\n";
    for (std::size_t i = 0; i < r.codes.size(); ++i) {
      os << "  " << to_string(r.codes[i]) << " type " << r.certificate.types[i] << " R =";
      for (VertexId v : r.certificate.restrictions[i]) os << " " << to_string(t.vertex(v));
      os << "\n";
    }
    os << "types " << to_string(r.certificate.type_histogram(c.k)) << "\n";
    os << "restrictions " << (r.restrictions_match ? "match" : "DO NOT MATCH") << " the ascent rule\n";
    emit(c, os.str());
  }
  if (!r.certificate.valid) throw InvariantBreach("shelling certificate failed");
  if (!r.restrictions_match) throw InvariantBreach("restriction faces differ from the ascent rule");
  return kOk;
}

int cmd_link(const RunConfig& c, const std::string& vertex, const std::vector<std::string>& faces) {
  need_format(c, {"text", "json"}, "link");
  if (vertex.empty() == faces.empty()) throw DomainError("link: give exactly one of --vertex or --face");
  const Subdivision t(c.k, c.q);
  std::vector<LatticeVertex> pts;
  if (!vertex.empty()) {
    pts.push_back(parse_ints(vertex));
  } else {
    for (const auto& f : faces) {
      std::stringstream ss(f);
      std::string item;
      while (std::getline(ss, item, ';')) pts.push_back(parse_ints(item));
    }
  }
  const auto fl = link_of_face(t, pts, true);
  const auto label = lattice_labeler(t);
  if (c.format == "json") {
    json j = envelope("link");
    j["k"] = c.k;
    j["q"] = c.q;
    j["face"] = fl.ordered_face;
    j["index_sets"] = fl.index_sets;
    j["descriptor"] = descriptor_json(fl.descriptor);
    if (pts.size() == 1) {
      const auto ty = t.vertex_type(pts[0]);
      j["vertex_type"] = {{"leading_zeros", ty.leading_zeros}, {"runs", ty.runs}, {"trailing_q", ty.trailing_q}};
    }
    j["link"] = complex_json(fl.link, label);
    j["model"] = complex_json(fl.model);
    j["poset"] = poset_json(fl.poset);
    j["verified"] = fl.verified;
    emit(c, dump(j));
  } else {
    std::ostringstream os;
    os << "face";
    for (const auto& v : fl.ordered_face) os << " " << to_string(v);
    os << "\n";
    for (std::size_t i = 0; i < fl.index_sets.size(); ++i)
      os << "  S_" << i + 1 << " = " << to_string(fl.index_sets[i]) << "  sigma = " << to_string(fl.sigma[i].parts())
         << "\n";
    os << "lambda = " << to_string(fl.descriptor.lambda.parts()) << ", M = {";
    for (std::size_t i = 0; i < fl.descriptor.sigma.size(); ++i)
      os << (i ? ", " : "") << to_string(fl.descriptor.sigma[i].parts());
    os << "}\n";
    os << "link: " << fl.link.num_vertices() << " vertices, " << fl.link.num_facets() << " facets, dim "
       << fl.link.dimension() << "\n";
    os << "model: " << fl.model.num_vertices() << " vertices, " << fl.model.num_facets() << " facets\n";
    os << "poset P_F: " << fl.poset.size() << " elements\n";
    os << "link ~ model and star ~ order complex of P_F: " << (fl.verified ? "yes" : "NO") << "\n";
    emit(c, os.str());
  }
  if (!fl.verified) throw InvariantBreach("link does not match its model");
  return kOk;
}

std::string face_table_csv(int k, int q) {
  std::string s = "parts,partition,faces\n";
  for (int p = 1; p <= k; ++p)
    for (const auto& beta : partitions(k, p))
      s += std::to_string(p) + "," + parts_text(beta) + "," + count_faces_with_link_type(k, q, beta).str() + "\n";
  return s;
}

int cmd_classify(const RunConfig& c, bool table, const std::string& partition) {
  need_format(c, {"text", "json", "csv"}, "classify-links");
  require(c.k >= 2 && c.q >= 1, "classify-links: need k >= 2 and q >= 1");
  if (!partition.empty()) {
    const auto beta = Partition::normalized(parse_ints(partition));
    require(beta.total() == c.k, "--partition must partition k");
    const Count n = count_faces_with_link_type(c.k, c.q, beta);
    if (c.format == "json") {
      json j = envelope("link-type-count");
      j["k"] = c.k;
      j["q"] = c.q;
      j["partition"] = partition_json(beta);
      j["faces"] = count_json(n);
      emit(c, dump(j));
    } else if (c.format == "csv") {
      emit(c, "partition,faces\n" + parts_text(beta) + "," + n.str() + "\n");
    } else {
      emit(c, "faces of type " + to_string(beta.parts()) + ": " + n.str() + "\n");
    }
    return kOk;
  }

  if (c.format == "csv") {
    if (!table) throw DomainError("classify-links: csv output needs --table");
    emit(c, face_table_csv(c.k, c.q));
    return kOk;
  }
  if (c.format == "json") {
    json j = envelope("classify-links");
    j["k"] = c.k;
    j["q"] = c.q;
    json rows = json::array();
    for (int p = 1; p <= c.k; ++p)
      for (const auto& beta : partitions(c.k, p))
        rows.push_back({{"partition", partition_json(beta)}, {"faces", count_json(count_faces_with_link_type(c.k, c.q, beta))}});
    j["face_types"] = rows;
    j["vertex_link_types"] = count_json(count_link_types(c.k, c.q));
    json per_t = json::array();
    for (int t = 1; t <= c.k; ++t) per_t.push_back({{"t", t}, {"link_types", count_json(count_link_types_of_faces(c.k, c.q, t))}});
    j["face_link_types"] = per_t;
    emit(c, dump(j));
    return kOk;
  }

  std::ostringstream os;
  if (table) {
    std::vector<std::string> head, vals;
    for (int p = 1; p <= c.k; ++p)
      for (const auto& beta : partitions(c.k, p)) {
        head.push_back(parts_text(beta));
        vals.push_back(count_faces_with_link_type(c.k, c.q, beta).str());
      }
    os << "link type";
    for (const auto& h : head) os << " | " << h;
    os << "\n# faces  ";
    for (std::size_t i = 0; i < vals.size(); ++i) os << " | " << std::string(head[i].size() - std::min(head[i].size(), vals[i].size()), ' ') << vals[i];
    os << "\n";
  }
  os << "distinct vertex links in T_{" << c.k << "," << c.q << "}: " << count_link_types(c.k, c.q).str() << "\n";
  for (int t = 1; t <= c.k; ++t)
    os << "distinct links of " << t - 1 << "-faces: " << count_link_types_of_faces(c.k, c.q, t).str() << "\n";
  emit(c, os.str());
  return kOk;
}

int cmd_star_cluster(const RunConfig& c, const std::string& base) {
  need_format(c, {"text", "json", "csv"}, "star-cluster");
  require(c.k >= 2, "star-cluster: k must be at least 2");
  const Subdivision t(c.k, c.q);
  LatticeVertex v;
  if (base.empty()) {
    if (c.q < c.k + 1) {
      throw DomainError("star-cluster: the default base vertex (1,...,k-1) needs q >= " + std::to_string(c.k + 1) +
                        "; try -q " + std::to_string(c.k + 1));
    }
    v = default_star_cluster_base(c.k, c.q);
  } else {
    v = parse_ints(base);
  }
  if (c.format == "csv") {
    emit(c, des_init_csv(h_matrix(c.k)));
    return kOk;
  }
  const auto r = sc_shelling_and_h(t, v);
  const bool ok = r.certificate.valid && r.h_types == r.h_formula && r.h_types == r.h_from_f &&
                  r.count_enumerated == r.count_ie && r.count_ie == r.count_partition && r.count_ie == r.x_next;
  if (c.format == "json") {
    json j = star_cluster_json(r, t);
    j["consistent"] = ok;
    emit(c, dump(j));
  } else {
    auto trimmed = [](CountVec h) {
      while (h.size() > 1 && h.back() == 0) h.pop_back();
      return h;
    };
    std::ostringstream os;
    os << "star cluster of F(" << to_string(v) << ", Id) in T_{" << c.k << "," << c.q << "}\n";
    os << "layers";
    for (const auto& l : r.layers) os << " " << l.new_facets.size();
    os << "\n";
    os << "facets " << r.count_enumerated.str() << " (inclusion-exclusion " << r.count_ie.str() << ", partitions "
       << r.count_partition.str() << ", X_" << c.k + 1 << " " << r.x_next.str() << ")\n";
    os << "shelling " << (r.certificate.valid ? "valid" : "INVALID") << "\n";
    os << "h = " << to_string(trimmed(r.h_types)) << " (formula " << to_string(trimmed(r.h_formula)) << ", from f "
       << to_string(trimmed(r.h_from_f)) << ")\n";
    emit(c, os.str());
  }
  if (!ok) throw InvariantBreach("star cluster cross-checks failed");
  return kOk;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + p.string() + " failed");
}

// Every table the tool can regenerate, one file each.
int cmd_tables(const RunConfig& c) {
  if (c.out.empty()) throw DomainError("tables: --out DIR is required");
  const fs::path dir(c.out);
  fs::create_directories(dir);

  write_file(dir / "link_types_k6.csv", face_table_csv(6, 6));

  std::string qs = "s,Q_s\n", links = "m,links\n";
  for (int s = 0; s <= 9; ++s) qs += std::to_string(s) + "," + q_sequence(s).str() + "\n";
  for (int m = 0; m <= 9; ++m) links += std::to_string(m) + "," + count_distinct_links_dim(m).str() + "\n";
  write_file(dir / "q_sequence.csv", qs);
  write_file(dir / "distinct_links.csv", links);

  std::string eul = "k,A(k,0..k-1)\n";
  for (int k = 1; k <= 9; ++k) eul += csv_row(std::to_string(k), eulerian_row(k));
  write_file(dir / "eulerian.csv", eul);
  std::string xs = "n,X_n\n";
  const auto x = x_sequence(12);
  for (int n = 1; n <= 12; ++n) xs += std::to_string(n) + "," + x[n - 1].str() + "\n";
  write_file(dir / "x_sequence.csv", xs);

  for (int k = 3; k <= 7; ++k) write_file(dir / ("h_matrix_k" + std::to_string(k) + ".csv"), des_init_csv(h_matrix(k)));

  std::string hv = "k,q,h\n";
  for (int k = 2; k <= 8; ++k)
    for (int q = 1; q <= 6; ++q) {
      const auto h = h_closed_form(k, q);
      hv += std::to_string(k) + "," + std::to_string(q) + ",\"" + to_string(h) + "\"\n";
    }
  write_file(dir / "hvectors.csv", hv);

  std::string kl = "k,lambda,h\n";
  for (int k = 2; k <= 6; ++k)
    for (const auto& lambda : partitions(k))
      kl += std::to_string(k) + "," + parts_text(lambda) + ",\"" + to_string(h_k_lambda_recursive(lambda)) + "\"\n";
  write_file(dir / "k_lambda_h.csv", kl);

  std::string sc = "k,X_k+1,inclusion_exclusion,partitions,h\n";
  for (int k = 2; k <= 8; ++k) {
    sc += std::to_string(k) + "," + x_sequence(k + 1).back().str() + "," + sc_count_ie(k).str() + "," +
          sc_count_partition(k).str() + ",\"" + to_string(h_matrix(k).init_weighted_row()) + "\"\n";
  }
  write_file(dir / "star_cluster.csv", sc);

  std::cout << "wrote tables to " << dir.string() << "\n";
  return kOk;
}

int cmd_export(const RunConfig& c, bool off) {
  if (!off) throw DomainError("export: choose an output kind (--off)");
  if (c.format != "text" && c.format != "off") throw DomainError("export: --format must be off");
  const Subdivision t(c.k, c.q);
  check_budget(t, c);
  emit(c, off_text(t, c.max_facets));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edgewise subdivisions of simplices: facets, links, shellings and h-vectors"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool kq = true) {
    if (kq) {
      sub->add_option("-k", cfg.k, "number of vertices of the simplex (k >= 2)")->required();
      sub->add_option("-q", cfg.q, "subdivision parameter (q >= 1)")->required();
    }
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "off"}));
    sub->add_option("--out", cfg.out, "output path (stdout if omitted)");
    sub->add_option("--max-facets", cfg.max_facets, "capacity for exhaustive routes")->check(CLI::PositiveNumber);
  };

  auto* build = app.add_subcommand("build", "facet codes and vertices");
  common(build);
  auto* hvec = app.add_subcommand("hvector", "h-vector by every route, with agreement verdict");
  common(hvec);
  bool with_shelling = false;
  hvec->add_flag("--shelling", with_shelling, "also compare the shelling type histogram");
  auto* shell = app.add_subcommand("shell", "global shelling order and certificate");
  common(shell);
  auto* lnk = app.add_subcommand("link", "link of a vertex or face with its chain-product model");
  common(lnk);
  std::string vertex;
  std::vector<std::string> faces;
  lnk->add_option("--vertex", vertex, "lattice point v1,v2,...");
  lnk->add_option("--face", faces, "face vertex (repeat, or separate points with ';')");
  auto* cls = app.add_subcommand("classify-links", "counts of link types");
  common(cls);
  bool table = false;
  std::string partition;
  cls->add_flag("--table", table, "face counts per vertex link type");
  cls->add_option("--partition", partition, "count faces of one type, e.g. 3,2,1");
  auto* sc = app.add_subcommand("star-cluster", "star cluster of a facet, its shelling and h-vector");
  common(sc);
  std::string base;
  sc->add_option("--base", base, "base vertex v of F(v, Id) (default 1,2,...,k-1)");
  auto* tables = app.add_subcommand("tables", "regenerate all tables into --out DIR");
  common(tables, false);
  auto* exp = app.add_subcommand("export", "geometric export");
  common(exp);
  bool off = false;
  exp->add_flag("--off", off, "OFF with integer lattice coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (hvec->parsed()) return cmd_hvector(cfg, with_shelling);
    if (shell->parsed()) return cmd_shell(cfg);
    if (lnk->parsed()) return cmd_link(cfg, vertex, faces);
    if (cls->parsed()) return cmd_classify(cfg, table, partition);
    if (sc->parsed()) return cmd_star_cluster(cfg, base);
    if (tables->parsed()) return cmd_tables(cfg);
    if (exp->parsed()) return cmd_export(cfg, off);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantBreach& e) {
    std::cerr << "invariant failed: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}
