#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgewise/combinatorics.hpp"
#include "edgewise/complex.hpp"
#include "edgewise/links.hpp"
#include "edgewise/poset.hpp"
#include "edgewise/shelling.hpp"
#include "edgewise/star_cluster.hpp"
#include "edgewise/subdivision.hpp"

namespace edgewise {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "edgewise/v1";

/// Object carrying the schema tag and a `kind` field.
json envelope(const std::string& kind);

/// Counts that fit in 64 bits become numbers, larger ones decimal strings.
json count_json(const Count& c);
json counts_json(const CountVec& v);

using VertexLabeler = std::function<json(VertexId)>;

/// Facets as sorted lists of vertex labels; facets sorted by label lists.
json complex_json(const SimplicialComplex& k, const VertexLabeler& label = nullptr);

/// Labels a T_{k,q} vertex id by its lattice point.
VertexLabeler lattice_labeler(const Subdivision& t);

json partition_json(const Partition& p);
json poset_json(const GradedPoset& p);
json descriptor_json(const LinkDescriptor& d);
json certificate_json(const ShellingCertificate& c, const VertexLabeler& label = nullptr);
json h_report_json(const HVectorReport& r);
json star_cluster_json(const StarClusterReport& r, const Subdivision& t);

/// Rows init = 1..k, columns des = 0..k-1.
std::string des_init_csv(const DescentInitTable& table);

/// OFF text with integer W_{k,q} coordinates, vertices in vertex_set order.
/// Coordinates are zero-padded to three for k <= 4; larger k use nOFF.
std::string off_text(const Subdivision& t, std::size_t max_facets = kDefaultMaxFacets);

struct OffMesh {
  int dimension = 3;
  std::vector<std::vector<long long>> vertices;
  std::vector<std::vector<long long>> faces;
};

/// Parser for the subset of OFF/nOFF written by off_text. Throws
/// DomainError on malformed input.
OffMesh parse_off(const std::string& text);

}  // namespace edgewise
