#include <doctest.h>

#include <set>

#include "planarlab/report.hpp"
#include "planarlab/search.hpp"

using namespace planarlab;

namespace {

UniPoly P(const Field& f, const char* text) { return parse_unipoly(f, text); }

std::string dump_all(const SearchResult& r) {
  Json j = search_summary_json(r);
  for (const auto& s : r.survivors) j["list"].push_back(to_json(s));
  return j.dump();
}

}  // namespace

TEST_CASE("normalize") {
  const Field f3 = make_field(3, 1);
  NormalizationFlags mz{true, true, false, false};
  CHECK(normalize(P(f3, "4:2,0:1"), mz) == P(f3, "4:1"));
  NormalizationFlags lin{false, false, true, false};
  CHECK(normalize(P(f3, "4:1,3:1,1:1"), lin) == P(f3, "4:1,3:1"));
  NormalizationFlags pp{false, false, false, true};
  CHECK(normalize(P(f3, "4:1,3:1,1:1"), pp) == P(f3, "4:1"));
  NormalizationFlags all{true, true, true, true};
  const UniPoly g = normalize(P(f3, "10:2,9:1,6:1,2:1,0:2"), all);
  CHECK(normalize(g, all) == g);
  CHECK(normalize(P(f3, "4:1"), all) == P(f3, "4:1"));
}

TEST_CASE("search examples") {
  const Field f2 = make_field(2, 1), f3 = make_field(3, 1);
  SearchSpec quad;
  quad.field = f3;
  quad.degree = 2;
  quad.extensions = {1, 2, 3};
  quad.flags.monic = true;
  auto res = run_search(quad);
  CHECK(res.space_size == 9);
  CHECK(res.survivors.size() == 9);

  SearchSpec cubic;
  cubic.field = f2;
  cubic.degree = 3;
  cubic.extensions = {1, 2};
  res = run_search(cubic);
  CHECK(res.survivors.empty());

  SearchSpec quartic;
  quartic.field = f3;
  quartic.degree = 4;
  quartic.extensions = {1, 3};
  quartic.flags.monic = true;
  quartic.flags.zero_constant = true;
  res = run_search(quartic);
  std::set<std::string> found;
  for (const auto& s : res.survivors) found.insert(s.poly.to_string());
  CHECK(found.count("4:1"));
  CHECK(res.ea_check_ran);
  CHECK_FALSE(res.survivors.front().ea_variant_of.has_value());
}

TEST_CASE("strict pruning is a subset of no pruning and pruned polynomials fail") {
  for (auto [field, degree, exts] : {std::tuple{"3^1", 4u, std::vector<unsigned>{1, 3}},
                                     {"3^1", 5u, std::vector<unsigned>{1, 2}},
                                     {"2^1", 5u, std::vector<unsigned>{1, 2, 3, 4}},
                                     {"2^1", 6u, std::vector<unsigned>{1, 2, 3, 4}}}) {
    SearchSpec spec;
    spec.field = parse_field(field);
    spec.degree = degree;
    spec.extensions = exts;
    spec.flags.monic = true;
    spec.prune = PruneMode::off;
    const auto off = run_search(spec);
    spec.prune = PruneMode::strict;
    const auto strict = run_search(spec);
    std::set<std::string> all;
    for (const auto& s : off.survivors) all.insert(s.poly.to_string());
    for (const auto& s : strict.survivors) REQUIRE(all.count(s.poly.to_string()));
    CHECK(strict.tested + strict.skipped_by_prune == strict.space_size);
    CHECK(off.excluded_survivors == 0);
    CHECK(off.survivors.size() == strict.survivors.size());
  }
}

TEST_CASE("degree filters are advisory at small r") {
  // Excluded by the degree filter, yet planar on F_2, F_4 and F_8.
  const Field f2 = make_field(2, 1);
  const UniPoly f = P(f2, "6:1,3:1");
  CHECK(degree_class(f).verdict == FilterVerdict::excluded);
  for (unsigned r = 1; r <= 3; ++r) CHECK(is_planar(f, r).planar);
  CHECK_FALSE(is_planar(f, 4).planar);
  SearchSpec spec;
  spec.field = f2;
  spec.degree = 6;
  spec.extensions = {1, 2, 3};
  spec.flags.monic = true;
  const auto advisory = run_search(spec);
  CHECK(advisory.excluded_survivors == 16);
  CHECK(advisory.survivors.front().degree_class.verdict == FilterVerdict::excluded);
}

TEST_CASE("search output is independent of thread count") {
  SearchSpec spec;
  spec.field = make_field(3, 1);
  spec.degree = 5;
  spec.extensions = {1, 2};
  spec.threads = 1;
  const std::string one = dump_all(run_search(spec));
  spec.threads = 5;
  CHECK(dump_all(run_search(spec)) == one);
}

TEST_CASE("search guard") {
  SearchSpec spec;
  spec.field = make_field(5, 1);
  spec.degree = 12;
  CHECK(search_space_size(spec) == 4 * 244140625ull);
  CHECK_THROWS_AS(run_search(spec), GuardExceeded);
  spec.degree = 0;
  CHECK_THROWS(run_search(spec));
}

TEST_CASE("affine EA variants") {
  const Field f3 = make_field(3, 1);
  CHECK(is_affine_ea_variant(P(f3, "4:1"), P(f3, "4:2,3:1")));
  CHECK(is_affine_ea_variant(P(f3, "2:1"), P(f3, "2:1,1:2,0:1")));
  CHECK_FALSE(is_affine_ea_variant(P(f3, "4:1"), P(f3, "4:1,2:1")));
  CHECK_FALSE(is_affine_ea_variant(P(f3, "4:1"), P(f3, "5:1")));
}
