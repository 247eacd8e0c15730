// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion N] [--threads T] [--seed S] [--report]

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "planarlab/families.hpp"
#include "planarlab/gf.hpp"
#include "planarlab/multipoly.hpp"
#include "planarlab/planarity.hpp"
#include "planarlab/pointcount.hpp"
#include "planarlab/report.hpp"
#include "planarlab/surfaces.hpp"
#include "planarlab/unipoly.hpp"

using namespace planarlab;

namespace {

struct Context {
  unsigned threads = 1;
  std::uint64_t seed = 20140101;
};

struct Outcome {
  bool pass = true;
  std::string detail;
  Json report = Json::object();
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome(const Context&)> run;
};

CheckOptions check_opts(const Context& c) { return {c.threads, kDefaultPlanarGuard}; }
CountOptions count_opts(const Context& c) { return {c.threads, kDefaultCountGuard}; }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// The 16 polynomials over F_2 with terms drawn from X^4, X^2, X, 1.
std::vector<UniPoly> char2_linearized() {
  const Field f2 = make_field(2, 1);
  std::vector<UniPoly> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::pair<unsigned, std::uint32_t>> terms;
    for (unsigned b = 0; b < 4; ++b)
      if (mask & (1u << b)) terms.push_back({b == 0 ? 0u : 1u << (b - 1), 1});
    out.push_back(UniPoly::from_terms(f2, terms));
  }
  return out;
}

UniPoly ding_yuan(std::uint32_t u) {
  return family_instance(FamilyTag::ding_yuan, {1, u, 1, {}}, make_field(3, 1)).polynomial;
}

// G or H as the exact quotient; for deg f < 2 in odd characteristic G is the zero polynomial.
MultiPoly surface_of(const UniPoly& f) {
  if (parity_of(f.field()) == Parity::odd && f.degree() < 2) {
    return exact_divide(difference_numerator(f), trivial_denominator(f.field()));
  }
  return build_surface(f).surface;
}

Outcome c1_monomial_family(const Context& ctx) {
  Outcome o;
  const Field f3 = make_field(3, 1);
  int checks = 0, bad = 0;
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned r = 1; r <= 4; ++r) {
      const bool expected = (r / std::gcd(k, r)) % 2 == 1;
      const auto v = is_planar_odd(UniPoly::monomial(f3, static_cast<unsigned>(ipow(3, k) + 1)), r, check_opts(ctx));
      ++checks;
      if (v.planar != expected) ++bad;
      o.report["rows"].push_back({{"k", k}, {"r", r}, {"expected", expected}, {"planar", v.planar}});
    }
  }
  o.pass = bad == 0 && checks == 12;
  o.detail = std::to_string(checks - bad) + "/" + std::to_string(checks) + " verdicts match";
  return o;
}

Outcome c2_half_family(const Context& ctx) {
  Outcome o;
  const UniPoly f = family_instance(FamilyTag::coulter_matthews_half, {3, 0, 1, {}}, make_field(3, 1)).polynomial;
  std::string planar_at;
  for (unsigned r = 1; r <= 4; ++r) {
    const bool expected = r != 3;
    const auto v = is_planar_odd(f, r, check_opts(ctx));
    o.pass = o.pass && v.planar == expected;
    if (v.planar) planar_at += std::to_string(r) + " ";
    o.report["rows"].push_back({{"r", r}, {"expected", expected}, {"planar", v.planar}});
  }
  o.detail = "X^14 planar at r = " + planar_at;
  return o;
}

Outcome c3_third_family(const Context& ctx) {
  Outcome o;
  for (std::uint32_t u : {1u, 2u}) {
    const UniPoly f = ding_yuan(u);
    for (unsigned r = 1; r <= 3; ++r) {
      const auto v = is_planar_odd(f, r, check_opts(ctx));
      if (r != 2) o.pass = o.pass && v.planar;
      else o.detail += "u=" + std::to_string(u) + " r=2 " + (v.planar ? "planar; " : "not planar; ");
      o.report["rows"].push_back({{"u", u}, {"r", r}, {"planar", v.planar}, {"asserted", r != 2}});
    }
  }
  o.detail = (o.pass ? "planar at r = 1, 3 for u = 1, 2; recorded " : "failed; recorded ") + o.detail;
  return o;
}

Outcome c4_char2_positive(const Context& ctx) {
  Outcome o;
  int planar = 0, total = 0;
  for (const UniPoly& f : char2_linearized()) {
    for (unsigned r = 1; r <= 6; ++r) {
      const auto v = is_planar_even(f, r, check_opts(ctx));
      ++total;
      if (v.planar) ++planar;
      else o.report["failures"].push_back({{"poly", f.to_string()}, {"r", r}});
    }
  }
  o.pass = planar == total && total == 96;
  o.detail = std::to_string(planar) + "/" + std::to_string(total) + " planar";
  return o;
}

Outcome c5_char2_negative(const Context& ctx) {
  Outcome o;
  const Field f2 = make_field(2, 1);
  const UniPoly f = UniPoly::monomial(f2, 3);
  const SurfaceBundle b = build_H(f);
  const ZeroRecord rec = count_zeros(b, 2, count_opts(ctx));
  o.report["count_r2"] = to_json(rec);
  bool witness_ok = false;
  if (rec.nontrivial_zeros > 0 && rec.first_witness) {
    const auto& [x, y, z] = *rec.first_witness;
    const Extension ext = make_extension(f2, 2);
    const bool on_surface = b.surface.evaluate({x, y, z, ext.field.zero()}, ext.embedding).is_zero();
    // With e = x + y the zero says f(x+e)+f(x)+ex = f(z+e)+f(z)+ez.
    const FieldElement e = x + y;
    auto diff = [&](const FieldElement& t) { return f.evaluate(t + e, ext.embedding) + f.evaluate(t, ext.embedding) + e * t; };
    witness_ok = on_surface && !(x == y) && !(x == z) && diff(x) == diff(z);
  }
  bool all_nonplanar = true;
  for (unsigned r = 2; r <= 6; ++r) {
    const auto v = is_planar_even(f, r, check_opts(ctx));
    all_nonplanar = all_nonplanar && !v.planar && witness_is_valid(f, v);
    o.report["verdicts"].push_back(to_json(v));
  }
  o.pass = witness_ok && all_nonplanar;
  o.detail = "nontrivial zeros at r=2: " + std::to_string(rec.nontrivial_zeros) +
             (witness_ok ? ", witness rechecked" : ", witness invalid") +
             (all_nonplanar ? ", non-planar for r = 2..6" : ", planar somewhere in r = 2..6");
  return o;
}

Outcome c6_surface_equivalence(const Context& ctx) {
  Outcome o;
  int checked = 0, mismatches = 0;
  auto sweep = [&](const Field& field, unsigned max_degree, std::vector<unsigned> rs) {
    const std::uint64_t q = field.size();
    const std::uint64_t count = ipow(q, max_degree + 1);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FieldElement> coeffs;
      std::uint64_t v = idx;
      for (unsigned i = 0; i <= max_degree; ++i) {
        coeffs.push_back(field.element(v % q));
        v /= q;
      }
      const UniPoly f(field, coeffs);
      const MultiPoly s = surface_of(f);
      for (unsigned r : rs) {
        const bool no_nontrivial = count_zeros(s, r, count_opts(ctx)).nontrivial_zeros == 0;
        const bool planar = is_planar(f, r, check_opts(ctx)).planar;
        ++checked;
        if (no_nontrivial != planar) {
          ++mismatches;
          o.report["mismatches"].push_back({{"field", field.describe()}, {"poly", f.to_string()}, {"r", r}});
        }
      }
    }
  };
  sweep(make_field(2, 1), 6, {1, 2, 3});
  sweep(make_field(3, 1), 4, {1, 2});
  o.report["checked"] = checked;
  o.pass = mismatches == 0 && checked == 128 * 3 + 243 * 2;
  o.detail = std::to_string(checked) + " (f, r) pairs, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome run_checks(const std::vector<IdentityCheck>& checks) {
  Outcome o;
  int passed = 0;
  for (const auto& c : checks) {
    o.report["checks"].push_back(to_json(c));
    if (c.pass) ++passed;
    else o.detail += " [" + c.parameters + ": " + c.witness + "]";
  }
  o.pass = passed == static_cast<int>(checks.size()) && !checks.empty();
  o.detail = std::to_string(passed) + "/" + std::to_string(checks.size()) + " pass" + o.detail;
  return o;
}

Outcome c7_diagonal_formula(const Context&) {
  std::vector<IdentityCheck> checks;
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned j = 2; j <= 20; ++j) checks.push_back(check_diagonal_formula(make_field(p, 1), j));
  return run_checks(checks);
}

Outcome c8_coprime(const Context&) {
  std::vector<IdentityCheck> checks;
  for (std::uint32_t p : {3u, 5u})
    for (unsigned j = 2; j <= p * p + 1; ++j)
      if (j % p != 0 && (j - 1) % p != 0) checks.push_back(check_diagonal_coprime(make_field(p, 1), j, 1));
  return run_checks(checks);
}

Outcome c9_square_free(const Context&) {
  std::vector<IdentityCheck> checks;
  for (auto [p, k] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) checks.push_back(check_square_free(p, k));
  return run_checks(checks);
}

Outcome c10_odd_degree(const Context&) {
  std::vector<IdentityCheck> checks;
  for (std::uint32_t p : {3u, 5u})
    for (unsigned d = 3; d <= 19; d += 2) checks.push_back(check_odd_degree_component(make_field(p, 1), d));
  return run_checks(checks);
}

Outcome c11_doubling(const Context&) {
  std::vector<IdentityCheck> checks;
  for (unsigned d : {6u, 10u, 14u}) checks.push_back(check_doubling_identity(d));
  return run_checks(checks);
}

Outcome c12_nondivisibility(const Context& ctx) {
  std::mt19937_64 rng(ctx.seed);
  std::vector<IdentityCheck> checks;
  auto sample = [&](const std::vector<Field>& fields) {
    int done = 0;
    while (done < 50) {
      const Field& field = fields[rng() % fields.size()];
      const unsigned degree = 2 + static_cast<unsigned>(rng() % 9);
      std::vector<FieldElement> coeffs(degree + 1);
      for (auto& c : coeffs) c = field.element(rng() % field.size());
      coeffs.back() = field.element(1 + rng() % (field.size() - 1));
      const UniPoly f(field, coeffs);
      if (f.derivative().degree() < 1) continue;
      checks.push_back(check_trivial_nondivisibility(f));
      ++done;
    }
  };
  sample({make_field(3, 1), make_field(5, 1), make_field(3, 2), make_field(7, 1)});
  sample({make_field(2, 1), make_field(2, 2), make_field(2, 3)});
  return run_checks(checks);
}

Outcome c13_division_round_trip(const Context& ctx) {
  Outcome o;
  std::mt19937_64 rng(ctx.seed + 13);
  int failures = 0, total = 0;
  for (const char* text : {"2^1", "3^1", "2^2", "5^1", "3^2"}) {
    const Field f = parse_field(text);
    const MultiPoly x = MultiPoly::variable(f, Var::X), y = MultiPoly::variable(f, Var::Y),
                    z = MultiPoly::variable(f, Var::Z);
    const std::vector<MultiPoly> forms{x - y, x - z, x + y, x + z, y + z};
    int field_failures = 0;
    for (int i = 0; i < 200; ++i) {
      MultiPoly a(f);
      const unsigned terms = 1 + static_cast<unsigned>(rng() % 8);
      for (unsigned t = 0; t < terms; ++t) {
        Exponents e{};
        for (auto& v : e) v = static_cast<std::uint16_t>(rng() % 6);
        a += MultiPoly::term(f, e, f.element(1 + rng() % (f.size() - 1)));
      }
      const MultiPoly& l = forms[rng() % forms.size()];
      ++total;
      bool ok = false;
      try {
        ok = exact_divide(a * l, l) == a;
      } catch (const std::exception&) {
      }
      if (!ok) ++field_failures;
    }
    failures += field_failures;
    o.report["fields"].push_back({{"field", f.describe()}, {"cases", 200}, {"failures", field_failures}});
  }
  o.pass = failures == 0 && total == 1000;
  o.detail = std::to_string(total) + " round trips, " + std::to_string(failures) + " failures";
  return o;
}

Outcome c14_diagonal_bound(const Context& ctx) {
  Outcome o;
  const Field f3 = make_field(3, 1), f2 = make_field(2, 1);
  std::vector<std::pair<UniPoly, unsigned>> grid;
  for (unsigned k = 0; k <= 2; ++k) grid.push_back({UniPoly::monomial(f3, static_cast<unsigned>(ipow(3, k) + 1)), 4});
  grid.push_back({UniPoly::monomial(f3, 14), 4});
  for (std::uint32_t u : {1u, 2u}) grid.push_back({ding_yuan(u), 3});
  for (const UniPoly& f : char2_linearized()) grid.push_back({f, 6});
  grid.push_back({UniPoly::monomial(f2, 3), 6});
  int checks = 0, held = 0;
  for (const auto& [f, rmax] : grid) {
    const SurfaceBundle b = build_surface(f);
    for (unsigned r = 1; r <= rmax; ++r) {
      const DiagonalBound d = diagonal_zero_bound_check(b, r, count_opts(ctx));
      ++checks;
      if (d.holds) ++held;
      Json row = to_json(d);
      row["poly"] = f.to_string();
      row["field"] = f.field().describe();
      o.report["rows"].push_back(std::move(row));
    }
  }
  o.pass = held == checks;
  o.detail = std::to_string(held) + "/" + std::to_string(checks) + " (f, r) within q^r deg";
  return o;
}

std::vector<Criterion> criteria();

Outcome c15_determinism(const Context& ctx) {
  Outcome o;
  Context one = ctx, many = ctx;
  one.threads = 1;
  many.threads = std::max(4u, ctx.threads);
  int identical = 0, total = 0;
  for (const auto& c : criteria()) {
    if (c.id == 15) continue;
    const std::string a = c.run(one).report.dump(), b = c.run(many).report.dump();
    ++total;
    if (a == b) ++identical;
    else o.detail += " [criterion " + std::to_string(c.id) + " differs]";
    o.report["digests"].push_back({{"criterion", c.id}, {"one", digest(Json::parse(a))}, {"many", digest(Json::parse(b))}});
  }
  o.pass = identical == total;
  o.detail = std::to_string(identical) + "/" + std::to_string(total) + " reports byte-identical with 1 and " +
             std::to_string(many.threads) + " threads" + o.detail;
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "X^(3^k+1) planar exactly for odd r/gcd(k,r), k<=2, r<=4", 10, c1_monomial_family},
      {2, "X^14 over F_3 planar exactly for r in {1,2,4}", 30, c2_half_family},
      {3, "X^10-uX^6-u^2X^2, u in {1,2}: planar at r in {1,3}", 60, c3_third_family},
      {4, "16 p-power polynomials over F_2 planar for r<=6", 30, c4_char2_positive},
      {5, "X^3 over F_2: nontrivial zero of H at r=2, non-planar r=2..6", 10, c5_char2_negative},
      {6, "no nontrivial zeros <=> planar, exhaustive F_2 deg<=6 and F_3 deg<=4", 300, c6_surface_equivalence},
      {7, "phi_j(X,X,Z) = j(X^(j-1)-Z^(j-1))/(X-Z), j<=20, p in {3,5,7}", 10, c7_diagonal_formula},
      {8, "phi_j(X,X,Z) and phi_(p+1)(X,X,Z) coprime, p in {3,5}", 30, c8_coprime},
      {9, "square-free certificate for (3,1),(3,2),(5,1),(7,1)", 60, c9_square_free},
      {10, "Y+Z divides phi_d exactly once, odd d in 3..19, p in {3,5}", 30, c10_odd_degree},
      {11, "phi_d = phi_e^2 (X+Y)(X+Z) over F_2, d in {6,10,14}", 10, c11_doubling},
      {12, "G and H not divisible by the trivial linear forms, 50 random f per parity", 60, c12_nondivisibility},
      {13, "exact_divide(f*L, L) = f, 200 cases per field", 30, c13_division_round_trip},
      {14, "diagonal zero counts within q^r deg on the acceptance grid", 30, c14_diagonal_bound},
      {15, "reports byte-identical across thread counts", 600, c15_determinism},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planarlab acceptance suite"};
  int only = 0;
  Context ctx;
  bool show_report = false;
  app.add_option("--criterion", only, "Run a single criterion (1-15)")->check(CLI::Range(0, 15));
  app.add_option("--threads", ctx.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", ctx.seed, "Seed for the randomized criteria");
  app.add_flag("--report", show_report, "Print each criterion's JSON report");
  CLI11_PARSE(app, argc, argv);

  int failed = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %2d: %s | %s | %.2fs (budget %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", exceeded");
    if (show_report) std::printf("%s\n", o.report.dump().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
