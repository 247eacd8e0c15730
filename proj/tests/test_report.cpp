#include <doctest.h>

#include "planarlab/report.hpp"

using namespace planarlab;

TEST_CASE("digest is stable and sensitive") {
  Json a;
  a["x"] = 1;
  a["y"] = "two";
  Json b = a;
  CHECK(digest(a) == digest(b));
  CHECK(digest(a).size() == 64);
  b["x"] = 2;
  CHECK(digest(a) != digest(b));
  // SHA-256 of "{}".
  CHECK(digest(Json::object()) == "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
}

TEST_CASE("wrapped report embeds the manifest") {
  RunManifest m;
  m.command = "planar";
  m.wall_time_seconds = 1.5;
  Json result;
  result["planar"] = true;
  const Json w = wrap_report(m, result);
  CHECK(w["manifest"]["command"] == "planar");
  CHECK(w["manifest"]["result_digest"] == digest(result));
  CHECK(w["result"] == result);
  m.wall_time_seconds = 9.0;
  CHECK(wrap_report(m, result)["manifest"]["result_digest"] == w["manifest"]["result_digest"]);
}

TEST_CASE("serialized polynomials and fields re-parse") {
  const Field f9 = make_field(3, 2);
  const UniPoly f = parse_unipoly(f9, "10:1,6:5,2:7");
  const auto v = is_planar(f, 1);
  const Json j = to_json(v);
  CHECK(parse_field(j["field"].get<std::string>()) == f9);
  const SurfaceBundle b = build_surface(f);
  CHECK(parse_multipoly(f9, b.surface.to_string()) == b.surface);
  const ZeroRecord rec = count_zeros(b, 1);
  const Json jr = to_json(rec);
  CHECK(jr["total_zeros"] == rec.total_zeros);
  if (rec.first_witness) CHECK(jr["first_witness"].size() == 3);
}
