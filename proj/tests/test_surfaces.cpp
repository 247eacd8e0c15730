#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "planarlab/surfaces.hpp"

using namespace planarlab;

namespace {

UniPoly P(const Field& f, const char* text) { return parse_unipoly(f, text); }
MultiPoly V(const Field& f, Var v) { return MultiPoly::variable(f, v); }
MultiPoly C(const Field& f, std::uint32_t c) { return MultiPoly::constant(f, f.element(c)); }

}  // namespace

TEST_CASE("phi examples") {
  const Field f2 = make_field(2, 1), f3 = make_field(3, 1);
  CHECK(phi(0, f3).is_zero());
  CHECK(phi(1, f3).is_zero());
  CHECK(phi(1, f2).is_zero());
  CHECK(phi(2, f2).is_zero());
  CHECK(phi(3, f2) == V(f2, Var::Y) + V(f2, Var::Z));
  CHECK(phi(2, f3) == C(f3, 2));
  for (unsigned j = 2; j <= 12; ++j) {
    const MultiPoly p = phi(j, f3);
    if (!p.is_zero()) {
      CHECK(p.is_homogeneous());
      CHECK(p.total_degree() == static_cast<int>(j) - 2);
    }
  }
}

TEST_CASE("G and H examples") {
  const Field f2 = make_field(2, 1), f3 = make_field(3, 1);
  CHECK(build_G(P(f3, "2:1")).surface == C(f3, 2));
  CHECK(build_G(P(f3, "4:1")).surface == phi(4, f3));
  CHECK(build_G(P(f3, "3:1")).surface.is_zero());
  CHECK_THROWS(build_G(P(f3, "1:1")));
  CHECK_THROWS(build_G(P(f2, "3:1")));
  CHECK(build_H(P(f2, "4:1")).surface == C(f2, 1));
  CHECK(build_H(P(f2, "3:1")).surface == C(f2, 1) + V(f2, Var::Y) + V(f2, Var::Z));
  CHECK(build_H(P(f2, "6:1")).surface == C(f2, 1) + phi(3, f2).pow(2) * trivial_denominator(f2));
  CHECK_THROWS(build_H(P(f3, "3:1")));
}

TEST_CASE("surface degree and homogenization") {
  std::mt19937_64 rng(15);
  for (const char* text : {"3^1", "5^1", "3^2", "2^1", "2^2"}) {
    const Field f = parse_field(text);
    for (int i = 0; i < 25; ++i) {
      const UniPoly g = oracle::random_unipoly(f, 2 + rng() % 8, rng);
      const SurfaceBundle b = build_surface(g);
      const int d = g.degree();
      const MultiPoly& h = b.homogeneous;
      if (!h.is_zero()) {
        REQUIRE(h.is_homogeneous());
        REQUIRE(h.total_degree() == std::max(d, 2) - 2);
      }
      REQUIRE(substitute(h, {{Var::T, C(f, 1)}}) == b.surface);
      const MultiPoly section = section_at_infinity(h);
      if (b.parity == Parity::odd || d >= 3) {
        REQUIRE(section == phi(static_cast<unsigned>(d), f).scale(g.leading()));
      }
      if (!phi(static_cast<unsigned>(d), f).is_zero()) REQUIRE(b.surface.total_degree() == d - 2);
    }
  }
}

TEST_CASE("surface matches the numerator pointwise") {
  std::mt19937_64 rng(19);
  for (const char* text : {"3^1", "5^1", "3^2", "2^1", "2^2"}) {
    const Field f = parse_field(text);
    const Extension ext = make_extension(f, f.size() <= 3 ? 2 : 1);
    const auto elems = enumerate(ext.field);
    for (int i = 0; i < 10; ++i) {
      const UniPoly g = oracle::random_unipoly(f, 2 + rng() % 8, rng);
      const SurfaceBundle b = build_surface(g);
      const bool even = b.parity == Parity::even;
      for (int k = 0; k < 60; ++k) {
        const FieldElement x = elems[rng() % elems.size()], y = elems[rng() % elems.size()],
                           z = elems[rng() % elems.size()];
        if (x == y || x == z) continue;
        const FieldElement zero = ext.field.zero();
        const FieldElement value = b.surface.evaluate({x, y, z, zero}, ext.embedding);
        const FieldElement num = oracle::numerator(g, x, y, z, ext.embedding);
        const FieldElement den = even ? (x + y) * (x + z) : (x - y) * (x - z);
        if (even) {
          REQUIRE(value * den == num + den);
        } else {
          REQUIRE(value * den == num);
        }
        // The W-form at w = z - x (odd) or z + x (even).
        const FieldElement w = even ? z + x : z - x;
        REQUIRE(raw_form_value(g, x, y, w, ext.embedding) == value);
      }
    }
  }
}

TEST_CASE("G and H avoid the trivial linear factors") {
  std::mt19937_64 rng(29);
  for (const char* text : {"3^1", "5^1", "3^2", "2^1", "2^2"}) {
    const Field f = parse_field(text);
    int done = 0;
    while (done < 15) {
      const UniPoly g = oracle::random_unipoly(f, 2 + rng() % 8, rng);
      if (f.characteristic() != 2 && g.derivative().degree() < 1) {
        CHECK_THROWS(check_trivial_nondivisibility(g));
        continue;
      }
      const auto c = check_trivial_nondivisibility(g);
      CAPTURE(c.parameters);
      REQUIRE(c.pass);
      ++done;
    }
  }
}

TEST_CASE("structural identity examples") {
  const Field f3 = make_field(3, 1);
  const MultiPoly x = V(f3, Var::X), z = V(f3, Var::Z);
  const auto d5 = check_diagonal_formula(f3, 5);
  CHECK(d5.pass);
  CHECK(substitute(phi(5, f3), {{Var::Y, x}}) ==
        C(f3, 2) * (x.pow(3) + x.pow(2) * z + x * z.pow(2) + z.pow(3)));
  CHECK(check_square_free(3, 1).pass);
  CHECK(check_doubling_identity(10).pass);
  CHECK_THROWS(check_doubling_identity(8));
  CHECK_THROWS(check_diagonal_coprime(f3, 3, 1));
  CHECK(check_diagonal_coprime(f3, 5, 1).pass);
  CHECK(check_odd_degree_component(f3, 5).pass);
  CHECK(check_odd_degree_component(f3, 7).pass);
  CHECK_THROWS(check_odd_degree_component(f3, 4));
}

TEST_CASE("full identity sweeps pass where the identities apply") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    IdentityRange range;
    if (p == 7) range.max_odd_degree = 13;
    for (const auto& c : verify_structural_identities(p, range)) {
      CAPTURE(c.name);
      CAPTURE(c.parameters);
      CAPTURE(c.witness);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("Y + Z is a repeated factor of phi_d when p divides d") {
  const Field f3 = make_field(3, 1), f5 = make_field(5, 1);
  const MultiPoly x = V(f3, Var::X), y = V(f3, Var::Y), z = V(f3, Var::Z);
  CHECK(phi(3, f3).is_zero());
  CHECK(phi(9, f3).is_zero());
  CHECK(phi(15, f3) == (x - y).pow(2) * (x - z).pow(2) * phi(5, f3).pow(3));
  CHECK(divides_with_multiplicity(phi(15, f3), y + z) == 3u);
  CHECK(phi(5, f5).is_zero());
  CHECK(divides_with_multiplicity(phi(15, f5), V(f5, Var::Y) + V(f5, Var::Z)) == 5u);
}
