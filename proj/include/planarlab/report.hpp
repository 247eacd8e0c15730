// JSON serialization of results and the run manifest.
//
// Field names here are frozen; README.md lists them.

#ifndef PLANARLAB_REPORT_HPP
#define PLANARLAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "planarlab/families.hpp"
#include "planarlab/gf.hpp"
#include "planarlab/planarity.hpp"
#include "planarlab/pointcount.hpp"
#include "planarlab/search.hpp"
#include "planarlab/surfaces.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

using Json = nlohmann::ordered_json;

Json to_json(const Field& field);
Json to_json(const PlanarityVerdict& v);
Json to_json(const ApnVerdict& v);
Json to_json(const DegreeClass& c);
Json to_json(const ZeroRecord& rec);
Json to_json(const SurfaceReport& report);
Json to_json(const GrowthDiagnostic& g);
Json to_json(const DiagonalBound& b);
Json to_json(const IdentityCheck& check);
Json to_json(const FamilyReport& report);
Json to_json(const Survivor& s);
/// Summary only; survivors are serialized one per line by the caller.
Json search_summary_json(const SearchResult& result);

struct RunManifest {
  std::string command;
  Json args = Json::object();
  std::vector<std::string> fields;
  std::string version = PLANARLAB_VERSION;
  double wall_time_seconds = 0.0;
  std::string result_digest;
};

/// Hex SHA-256 of the compact dump of a result.
std::string digest(const Json& result);

Json to_json(const RunManifest& m);

/// {"manifest": ..., "result": ...} with the digest filled in from result.
Json wrap_report(RunManifest manifest, const Json& result);

}  // namespace planarlab

#endif  // PLANARLAB_REPORT_HPP
