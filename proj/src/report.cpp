#include "planarlab/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <stdexcept>

namespace planarlab {

namespace {

Json element_json(const std::optional<FieldElement>& e) {
  return e ? Json(e->code()) : Json(nullptr);
}

}  // namespace

Json to_json(const Field& field) { return field.describe(); }

Json to_json(const PlanarityVerdict& v) {
  Json j;
  j["base_field"] = v.base_field;
  j["field"] = v.field;
  j["r"] = v.r;
  j["planar"] = v.planar;
  j["failing_epsilon"] = element_json(v.failing_epsilon);
  if (v.colliding_pair) {
    j["colliding_pair"] = Json::array({v.colliding_pair->first.code(), v.colliding_pair->second.code()});
  } else {
    j["colliding_pair"] = nullptr;
  }
  return j;
}

Json to_json(const ApnVerdict& v) {
  Json j;
  j["field"] = v.field;
  j["r"] = v.r;
  j["apn"] = v.apn;
  j["failing_epsilon"] = element_json(v.failing_epsilon);
  j["bad_value"] = element_json(v.bad_value);
  j["bad_multiplicity"] = v.bad_multiplicity;
  return j;
}

Json to_json(const DegreeClass& c) {
  Json j;
  j["degree"] = c.degree;
  j["residue"] = c.residue;
  j["filter"] = to_string(c.filter);
  j["verdict"] = to_string(c.verdict);
  j["pk_exponent"] = c.pk_exponent ? Json(*c.pk_exponent) : Json(nullptr);
  j["tail_degree"] = c.tail_degree ? Json(*c.tail_degree) : Json(nullptr);
  j["monomial_verdict"] = c.monomial_verdict ? Json(to_string(*c.monomial_verdict)) : Json(nullptr);
  j["note"] = c.note;
  return j;
}

Json to_json(const ZeroRecord& rec) {
  Json j;
  j["r"] = rec.r;
  j["total_zeros"] = rec.total_zeros;
  j["trivial_zeros"] = rec.trivial_zeros;
  j["nontrivial_zeros"] = rec.nontrivial_zeros;
  if (rec.first_witness) {
    const auto& w = *rec.first_witness;
    j["first_witness"] = Json::array({w[0].code(), w[1].code(), w[2].code()});
  } else {
    j["first_witness"] = nullptr;
  }
  return j;
}

Json to_json(const SurfaceReport& report) {
  Json j;
  j["f"] = report.f_description;
  j["base_field"] = report.base_field;
  j["parity"] = to_string(report.parity);
  j["records"] = Json::array();
  for (const auto& r : report.records) j["records"].push_back(to_json(r));
  j["growth_ratios"] = report.growth_ratios;
  return j;
}

Json to_json(const GrowthDiagnostic& g) {
  Json j;
  j["r"] = g.r;
  j["ratios"] = g.ratios;
  j["max_deviation"] = g.max_deviation;
  return j;
}

Json to_json(const DiagonalBound& b) {
  Json j;
  j["r"] = b.r;
  j["zeros_xxz"] = b.zeros_xxz;
  j["zeros_xyx"] = b.zeros_xyx;
  j["bound"] = b.bound;
  j["holds"] = b.holds;
  return j;
}

Json to_json(const IdentityCheck& check) {
  Json j;
  j["name"] = check.name;
  j["parameters"] = check.parameters;
  j["pass"] = check.pass;
  j["witness"] = check.witness;
  return j;
}

Json to_json(const FamilyReport& report) {
  const auto& inst = report.instance;
  Json j;
  j["tag"] = to_string(inst.tag);
  j["k"] = inst.params.k;
  j["u"] = inst.params.u;
  j["n"] = inst.params.n;
  j["field"] = inst.polynomial.field().describe();
  j["poly"] = inst.polynomial.to_string();
  j["rows"] = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["r"] = row.r;
    r["predicted"] = to_string(row.predicted);
    r["planar"] = row.verdict.planar;
    r["mismatch"] = row.mismatch;
    r["verdict"] = to_json(row.verdict);
    j["rows"].push_back(std::move(r));
  }
  j["ok"] = report.ok();
  return j;
}

Json to_json(const Survivor& s) {
  Json j;
  j["poly"] = s.poly.to_string();
  j["degree_class"] = to_json(s.degree_class);
  j["verdicts"] = Json::array();
  for (const auto& v : s.verdicts) j["verdicts"].push_back(to_json(v));
  j["ea_variant_of"] = s.ea_variant_of ? Json(*s.ea_variant_of) : Json(nullptr);
  return j;
}

Json search_summary_json(const SearchResult& result) {
  Json j;
  j["space_size"] = result.space_size;
  j["tested"] = result.tested;
  j["skipped_by_prune"] = result.skipped_by_prune;
  j["excluded_survivors"] = result.excluded_survivors;
  j["survivors"] = result.survivors.size();
  j["ea_check_ran"] = result.ea_check_ran;
  return j;
}

std::string digest(const Json& result) {
  const std::string text = result.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["args"] = m.args;
  j["fields"] = m.fields;
  j["version"] = m.version;
  j["wall_time_seconds"] = m.wall_time_seconds;
  j["result_digest"] = m.result_digest;
  return j;
}

Json wrap_report(RunManifest manifest, const Json& result) {
  manifest.result_digest = digest(result);
  Json j;
  j["manifest"] = to_json(manifest);
  j["result"] = result;
  return j;
}

}  // namespace planarlab
