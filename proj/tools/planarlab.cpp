// planarlab command-line driver.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarlab/families.hpp"
#include "planarlab/gf.hpp"
#include "planarlab/planarity.hpp"
#include "planarlab/pointcount.hpp"
#include "planarlab/report.hpp"
#include "planarlab/search.hpp"
#include "planarlab/surfaces.hpp"
#include "planarlab/unipoly.hpp"

using namespace planarlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Guards {
  std::uint64_t planar = kDefaultPlanarGuard;
  std::uint64_t count = kDefaultCountGuard;
  std::uint64_t search = kDefaultSearchGuard;
};

std::uint64_t parse_u64(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(s, &pos);
  if (pos != s.size()) throw UsageError("bad number '" + s + "'");
  return v;
}

// PLANARLAB_GUARD is either one number for every guard or "planar=N,count=N,search=N".
Guards guards_from_env() {
  Guards g;
  const char* env = std::getenv("PLANARLAB_GUARD");
  if (!env || !*env) return g;
  const std::string text(env);
  try {
    if (text.find('=') == std::string::npos) {
      g.planar = g.count = g.search = parse_u64(text);
      return g;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("bad PLANARLAB_GUARD entry '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::uint64_t v = parse_u64(item.substr(eq + 1));
      if (key == "planar") g.planar = v;
      else if (key == "count") g.count = v;
      else if (key == "search") g.search = v;
      else throw UsageError("unknown PLANARLAB_GUARD key '" + key + "'");
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad PLANARLAB_GUARD '" + text + "'");
  }
  return g;
}

// "1,3,5" or "1..4".
std::vector<unsigned> parse_ext(const std::string& text) {
  std::vector<unsigned> out;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const auto lo = parse_u64(text.substr(0, dots)), hi = parse_u64(text.substr(dots + 2));
      if (lo < 1 || hi < lo || hi > 64) throw UsageError("bad range '" + text + "'");
      for (auto r = lo; r <= hi; ++r) out.push_back(static_cast<unsigned>(r));
      return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto r = parse_u64(item);
      if (r < 1 || r > 64) throw UsageError("bad extension degree '" + item + "'");
      out.push_back(static_cast<unsigned>(r));
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad extension list '" + text + "'");
  }
  if (out.empty()) throw UsageError("empty extension list");
  return out;
}

Field field_arg(const std::string& text) {
  try {
    return parse_field(text);
  } catch (const GuardExceeded&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad field: ") + e.what());
  }
}

UniPoly poly_arg(const Field& field, const std::string& text) {
  try {
    return parse_unipoly(field, text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad polynomial: ") + e.what());
  }
}

struct Output {
  bool csv = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void json(RunManifest manifest, const Json& result) const {
    manifest.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << wrap_report(std::move(manifest), result).dump() << '\n' << std::flush;
  }
};

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planarlab: planar functions, difference surfaces and exhaustive search over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool csv = false;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_flag("--csv", csv, "Emit CSV instead of JSON");

  std::string field_text = "3^1", poly_text, ext_text = "1";

  // planar
  auto* planar = app.add_subcommand("planar", "Definitional planarity test on F_{q^r}");
  planar->add_option("--field", field_text, "Base field, p^n or p^n/m0,...,mn")->required();
  planar->add_option("--poly", poly_text, "Polynomial as e:c,e:c,...")->required();
  planar->add_option("--ext", ext_text, "Extension degrees, 1,2,3 or 1..4");

  // apn
  auto* apn = app.add_subcommand("apn", "APN test on F_{2^{nr}}");
  apn->add_option("--field", field_text)->required();
  apn->add_option("--poly", poly_text)->required();
  apn->add_option("--ext", ext_text);

  // surface
  bool homogeneous = false;
  std::string section;
  auto* surface = app.add_subcommand("surface", "Build G or H and its phi expansion");
  surface->add_option("--field", field_text)->required();
  surface->add_option("--poly", poly_text)->required();
  surface->add_flag("--homogeneous", homogeneous, "Also emit the homogenization");
  surface->add_option("--section", section, "Hyperplane section, only T=0");

  // count
  std::string range_text;
  bool diagonal = false;
  auto* count = app.add_subcommand("count", "Exact zero counts of G or H over F_{q^r}");
  count->add_option("--field", field_text)->required();
  count->add_option("--poly", poly_text)->required();
  count->add_option("--ext-range", range_text, "Extension degrees, 1..R or a list")->required();
  count->add_flag("--diagonal", diagonal, "Also check the diagonal zero bound");

  // lemmas
  std::string check = "all";
  unsigned lemma_p = 3, lemma_k = 1, max_j = 20, max_odd = 19, samples = 50, max_degree = 8;
  auto* lemmas = app.add_subcommand("lemmas", "Mechanical checks of the structural identities");
  lemmas->add_option("--check", check)
      ->check(CLI::IsMember({"diagonal", "coprime", "square-free", "odd-degree", "doubling", "nondivisible", "all"}));
  lemmas->add_option("--p", lemma_p, "Characteristic");
  lemmas->add_option("--k", lemma_k, "Exponent k in p^k + 1");
  lemmas->add_option("--max-j", max_j, "Largest j for the diagonal formula");
  lemmas->add_option("--max-odd", max_odd, "Largest odd degree for the odd-degree check");
  lemmas->add_option("--samples", samples, "Random polynomials for the nondivisible check");
  lemmas->add_option("--max-degree", max_degree, "Largest degree of the random polynomials");

  // family
  std::string tag_text;
  unsigned fam_k = 1, fam_n = 1, verify_to = 3;
  std::uint32_t fam_u = 1;
  bool fam_field_given = false;
  auto* family = app.add_subcommand("family", "Known exceptional planar families against their ranges");
  family->add_option("--tag", tag_text)
      ->required()
      ->check(CLI::IsMember({"p-power-plus-one", "coulter-matthews-half", "ding-yuan", "char2-p-power"}));
  family->add_option("--field", field_text, "Base field (default 3^1, or 2^1 for char2-p-power)");
  family->add_option("--k", fam_k);
  family->add_option("--u", fam_u, "u as an element index of F_{3^n}");
  family->add_option("--n", fam_n);
  family->add_option("--poly", poly_text, "Polynomial for char2-p-power");
  family->add_option("--verify-to", verify_to, "Largest r to verify");

  // search
  unsigned degree = 2;
  NormalizationFlags flags;
  bool strict = false, no_prune = false;
  auto* search = app.add_subcommand("search", "Exhaustive search for planar polynomials (JSON lines)");
  search->add_option("--field", field_text)->required();
  search->add_option("--degree", degree)->required();
  search->add_option("--ext", ext_text);
  search->add_flag("--monic", flags.monic);
  search->add_flag("--zero-constant", flags.zero_constant);
  search->add_flag("--drop-linear", flags.drop_linear);
  search->add_flag("--drop-p-power", flags.drop_p_power);
  auto* strict_opt = search->add_flag("--strict-prune", strict, "Skip degree-excluded polynomials");
  search->add_flag("--no-prune", no_prune, "Disable degree filters")->excludes(strict_opt);

  // fields
  unsigned embed_to = 0;
  auto* fields = app.add_subcommand("fields", "Describe a field and optionally its embedding into F_{q^r}");
  fields->add_option("--field", field_text)->required();
  fields->add_option("--embed-to", embed_to, "r for the embedding into F_{q^r}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  fam_field_given = family->count("--field") > 0;

  Output out;
  out.csv = csv;
  int exit_code = kExitOk;
  try {
    const Guards guards = guards_from_env();
    CheckOptions check_opts{threads, guards.planar};
    CountOptions count_opts{threads, guards.count};
    RunManifest manifest;
    manifest.args["threads"] = threads;

    if (*planar || *apn) {
      const Field field = field_arg(field_text);
      const UniPoly f = poly_arg(field, poly_text);
      const auto exts = parse_ext(ext_text);
      manifest.command = *planar ? "planar" : "apn";
      manifest.args["field"] = field_text;
      manifest.args["poly"] = poly_text;
      manifest.args["ext"] = join(exts);
      manifest.fields = {field.describe()};
      Json result;
      result["field"] = field.describe();
      result["poly"] = f.to_string();
      if (*planar) result["degree_class"] = to_json(degree_class(f));
      result["verdicts"] = Json::array();
      if (csv) std::cout << (*planar ? "r,planar,failing_epsilon\n" : "r,apn,failing_epsilon\n");
      for (unsigned r : exts) {
        if (*planar) {
          const auto v = is_planar(f, r, check_opts);
          result["verdicts"].push_back(to_json(v));
          if (csv) std::cout << r << ',' << v.planar << ',' << (v.failing_epsilon ? v.failing_epsilon->to_string() : "") << '\n';
        } else {
          const auto v = apn_check(f, r, check_opts);
          result["verdicts"].push_back(to_json(v));
          if (csv) std::cout << r << ',' << v.apn << ',' << (v.failing_epsilon ? v.failing_epsilon->to_string() : "") << '\n';
        }
      }
      if (!csv) out.json(manifest, result);
    } else if (*surface) {
      const Field field = field_arg(field_text);
      const UniPoly f = poly_arg(field, poly_text);
      if (!section.empty() && section != "T=0") throw UsageError("only --section T=0 is supported");
      manifest.command = "surface";
      manifest.args["field"] = field_text;
      manifest.args["poly"] = poly_text;
      manifest.args["homogeneous"] = homogeneous;
      manifest.args["section"] = section;
      manifest.fields = {field.describe()};
      const SurfaceBundle b = build_surface(f);
      Json result;
      result["field"] = field.describe();
      result["poly"] = f.to_string();
      result["parity"] = to_string(b.parity);
      result["surface"] = b.surface.to_string();
      result["total_degree"] = b.surface.total_degree();
      result["phi_terms"] = Json::array();
      for (const auto& [j, p] : b.phi_terms) result["phi_terms"].push_back(j);
      if (homogeneous || !section.empty()) result["homogeneous"] = b.homogeneous.to_string();
      if (!section.empty()) result["section_T0"] = section_at_infinity(b.homogeneous).to_string();
      if (csv) {
        std::cout << "parity,total_degree,terms\n"
                  << to_string(b.parity) << ',' << b.surface.total_degree() << ',' << b.surface.terms().size() << '\n';
      } else {
        out.json(manifest, result);
      }
    } else if (*count) {
      const Field field = field_arg(field_text);
      const UniPoly f = poly_arg(field, poly_text);
      const auto exts = parse_ext(range_text);
      manifest.command = "count";
      manifest.args["field"] = field_text;
      manifest.args["poly"] = poly_text;
      manifest.args["ext_range"] = join(exts);
      manifest.args["diagonal"] = diagonal;
      manifest.fields = {field.describe()};
      const SurfaceBundle b = build_surface(f);
      const SurfaceReport report = surface_report(b, exts, count_opts);
      Json result = to_json(report);
      if (report.records.size() >= 3) result["growth_diagnostic"] = to_json(growth_diagnostic(report));
      if (diagonal) {
        result["diagonal_bounds"] = Json::array();
        for (unsigned r : exts) result["diagonal_bounds"].push_back(to_json(diagonal_zero_bound_check(b, r, count_opts)));
      }
      if (csv) {
        std::cout << "r,total_zeros,trivial_zeros,nontrivial_zeros,growth_ratio\n";
        for (std::size_t i = 0; i < report.records.size(); ++i) {
          const auto& rec = report.records[i];
          std::cout << rec.r << ',' << rec.total_zeros << ',' << rec.trivial_zeros << ',' << rec.nontrivial_zeros << ','
                    << report.growth_ratios[i] << '\n';
        }
      } else {
        out.json(manifest, result);
      }
    } else if (*lemmas) {
      if (!is_prime(lemma_p)) throw UsageError("--p must be prime");
      manifest.command = "lemmas";
      manifest.args["check"] = check;
      manifest.args["p"] = lemma_p;
      manifest.args["k"] = lemma_k;
      const Field field = make_field(lemma_p, 1);
      manifest.fields = {field.describe()};
      std::vector<IdentityCheck> checks;
      const bool all = check == "all";
      if (all) {
        IdentityRange range;
        range.max_j = max_j;
        range.k = lemma_k;
        range.max_odd_degree = max_odd;
        checks = verify_structural_identities(lemma_p, range);
      } else if (check == "diagonal") {
        for (unsigned j = 2; j <= max_j; ++j) checks.push_back(check_diagonal_formula(field, j));
      } else if (check == "coprime") {
        if (lemma_p == 2) throw UsageError("coprime check needs odd p");
        for (unsigned j = 2; j <= lemma_p * lemma_p + 1; ++j)
          if (j % lemma_p != 0 && (j - 1) % lemma_p != 0) checks.push_back(check_diagonal_coprime(field, j, lemma_k));
      } else if (check == "square-free") {
        if (lemma_p == 2) throw UsageError("square-free check needs odd p");
        checks.push_back(check_square_free(lemma_p, lemma_k));
      } else if (check == "odd-degree") {
        for (unsigned d = 3; d <= max_odd; d += 2) checks.push_back(check_odd_degree_component(field, d));
      } else if (check == "doubling") {
        if (lemma_p != 2) throw UsageError("doubling check needs p = 2");
        for (unsigned d = 6; d <= std::max(6u, max_j); d += 4) checks.push_back(check_doubling_identity(d));
      } else if (check == "nondivisible") {
        manifest.args["seed"] = seed;
        manifest.args["samples"] = samples;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<unsigned> deg(2, std::max(2u, max_degree));
        std::uniform_int_distribution<std::uint32_t> coeff(0, lemma_p - 1);
        while (checks.size() < samples) {
          std::vector<FieldElement> c(deg(rng) + 1);
          for (auto& x : c) x = field.element(coeff(rng));
          c.back() = field.element(1 + coeff(rng) % (lemma_p - 1));
          const UniPoly f(field, c);
          if (lemma_p != 2 && f.derivative().degree() < 1) continue;
          checks.push_back(check_trivial_nondivisibility(f));
        }
      }
      Json result;
      result["checks"] = Json::array();
      bool pass = true;
      for (const auto& c : checks) {
        result["checks"].push_back(to_json(c));
        pass = pass && c.pass;
      }
      result["pass"] = pass;
      if (!pass) exit_code = kExitFailure;
      if (csv) {
        std::cout << "name,parameters,pass\n";
        for (const auto& c : checks) std::cout << c.name << ",\"" << c.parameters << "\"," << c.pass << '\n';
      } else {
        out.json(manifest, result);
      }
    } else if (*family) {
      const FamilyTag tag = parse_family_tag(tag_text);
      if (!fam_field_given) field_text = tag == FamilyTag::char2_p_power ? "2^1" : "3^1";
      const Field field = field_arg(field_text);
      FamilyParams params;
      params.k = fam_k;
      params.u = fam_u;
      params.n = fam_n;
      if (tag == FamilyTag::char2_p_power) {
        if (poly_text.empty()) throw UsageError("char2-p-power needs --poly");
        params.poly = poly_arg(field, poly_text);
      }
      FamilyInstance inst;
      try {
        inst = family_instance(tag, params, field);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      manifest.command = "family";
      manifest.args["tag"] = tag_text;
      manifest.args["field"] = field_text;
      manifest.args["k"] = fam_k;
      manifest.args["u"] = fam_u;
      manifest.args["n"] = fam_n;
      manifest.args["poly"] = poly_text;
      manifest.args["verify_to"] = verify_to;
      manifest.fields = {inst.polynomial.field().describe()};
      const FamilyReport report = verify_family(inst, verify_to, check_opts);
      if (!report.ok()) exit_code = kExitFailure;
      if (csv) {
        std::cout << "r,predicted,planar,mismatch\n";
        for (const auto& row : report.rows)
          std::cout << row.r << ',' << to_string(row.predicted) << ',' << row.verdict.planar << ',' << row.mismatch << '\n';
      } else {
        out.json(manifest, to_json(report));
      }
    } else if (*search) {
      SearchSpec spec;
      spec.field = field_arg(field_text);
      spec.degree = degree;
      spec.extensions = parse_ext(ext_text);
      spec.flags = flags;
      spec.prune = no_prune ? PruneMode::off : strict ? PruneMode::strict : PruneMode::advisory;
      spec.threads = threads;
      spec.guard = guards.search;
      spec.planar_guard = guards.planar;
      if (degree == 0) throw UsageError("--degree must be at least 1");
      manifest.command = "search";
      manifest.args["field"] = field_text;
      manifest.args["degree"] = degree;
      manifest.args["ext"] = join(spec.extensions);
      manifest.args["monic"] = flags.monic;
      manifest.args["zero_constant"] = flags.zero_constant;
      manifest.args["drop_linear"] = flags.drop_linear;
      manifest.args["drop_p_power"] = flags.drop_p_power;
      manifest.args["prune"] = no_prune ? "off" : strict ? "strict" : "advisory";
      manifest.fields = {spec.field.describe()};
      const SearchResult result = run_search(spec);
      if (csv) {
        std::cout << "poly,filter_verdict,ea_variant_of\n";
        for (const auto& s : result.survivors)
          std::cout << s.poly.to_string() << ',' << to_string(s.degree_class.verdict) << ','
                    << (s.ea_variant_of ? std::to_string(*s.ea_variant_of) : "") << '\n';
      } else {
        Json all = Json::array();
        for (std::size_t i = 0; i < result.survivors.size(); ++i) {
          Json line = to_json(result.survivors[i]);
          line["kind"] = "survivor";
          line["index"] = i;
          std::cout << line.dump() << '\n' << std::flush;
          all.push_back(std::move(line));
        }
        Json summary = search_summary_json(result);
        Json digest_input;
        digest_input["summary"] = summary;
        digest_input["survivors"] = all;
        manifest.result_digest = digest(digest_input);
        manifest.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - out.start).count();
        Json tail;
        tail["kind"] = "summary";
        tail["summary"] = summary;
        tail["manifest"] = to_json(manifest);
        std::cout << tail.dump() << '\n' << std::flush;
      }
    } else if (*fields) {
      const Field field = field_arg(field_text);
      manifest.command = "fields";
      manifest.args["field"] = field_text;
      manifest.args["embed_to"] = embed_to;
      manifest.fields = {field.describe()};
      Json result;
      result["field"] = field.describe();
      result["characteristic"] = field.characteristic();
      result["degree"] = field.degree();
      result["size"] = field.size();
      result["modulus"] = field.modulus();
      result["modulus_irreducible"] = is_irreducible_mod_p(field.modulus(), field.characteristic());
      result["generator"] = field.generator().code();
      if (embed_to > 0) {
        const Extension ext = make_extension(field, embed_to);
        manifest.fields.push_back(ext.field.describe());
        result["extension"] = ext.field.describe();
        result["image_of_generator"] = ext.embedding.image_of_generator().code();
      }
      if (csv) {
        std::cout << "p,n,size,modulus\n"
                  << field.characteristic() << ',' << field.degree() << ',' << field.size() << ",\""
                  << field.describe() << "\"\n";
      } else {
        out.json(manifest, result);
      }
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return exit_code;
}
