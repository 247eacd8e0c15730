#include "planarlab/surfaces.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <utility>

namespace planarlab {

namespace {

MultiPoly var(const Field& f, Var v) { return MultiPoly::variable(f, v); }
MultiPoly one(const Field& f) { return MultiPoly::constant(f, f.one()); }

// -X+Y+Z, or X+Y+Z in characteristic two (the same polynomial).
MultiPoly fourth_point(const Field& f) { return -var(f, Var::X) + var(f, Var::Y) + var(f, Var::Z); }

struct PhiCache {
  std::shared_mutex mu;
  std::map<std::pair<const void*, unsigned>, MultiPoly> entries;
};

PhiCache& phi_cache() {
  static PhiCache c;
  return c;
}

// f evaluated at a polynomial argument, by Horner.
MultiPoly compose(const UniPoly& f, const MultiPoly& arg) {
  MultiPoly out(f.field());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) out = out * arg + MultiPoly::constant(f.field(), f.coeffs()[i]);
  return out;
}

MultiPoly expand_phi_sum(const UniPoly& f, unsigned first_j, std::map<unsigned, MultiPoly>& terms) {
  const Field& field = f.field();
  MultiPoly out(field);
  for (unsigned j : f.support()) {
    if (j < first_j) continue;
    const MultiPoly& p = terms.emplace(j, phi(j, field)).first->second;
    out += p.scale(f.coeff(j));
  }
  return out;
}

std::string describe_poly(const MultiPoly& p) { return p.to_string(); }

}  // namespace

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

MultiPoly phi_numerator(unsigned j, const Field& field) {
  const MultiPoly x = var(field, Var::X), y = var(field, Var::Y), z = var(field, Var::Z);
  if (parity_of(field) == Parity::even) return x.pow(j) + y.pow(j) + z.pow(j) + fourth_point(field).pow(j);
  return x.pow(j) - y.pow(j) - z.pow(j) + fourth_point(field).pow(j);
}

MultiPoly trivial_denominator(const Field& field) {
  const MultiPoly x = var(field, Var::X), y = var(field, Var::Y), z = var(field, Var::Z);
  if (parity_of(field) == Parity::even) return (x + y) * (x + z);
  return (x - y) * (x - z);
}

MultiPoly phi(unsigned j, const Field& field) {
  auto& cache = phi_cache();
  const auto key = std::make_pair(static_cast<const void*>(field.data()), j);
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
  }
  // Computed outside the lock; concurrent recomputation yields the same value.
  const MultiPoly x = var(field, Var::X), y = var(field, Var::Y), z = var(field, Var::Z);
  const bool even = parity_of(field) == Parity::even;
  MultiPoly q = exact_divide(phi_numerator(j, field), even ? x + y : x - y);
  q = exact_divide(q, even ? x + z : x - z);
  std::unique_lock lock(cache.mu);
  return cache.entries.emplace(key, std::move(q)).first->second;
}

MultiPoly difference_numerator(const UniPoly& f) {
  const Field& field = f.field();
  const MultiPoly fx = compose(f, var(field, Var::X)), fy = compose(f, var(field, Var::Y)),
                  fz = compose(f, var(field, Var::Z)), fw = compose(f, fourth_point(field));
  if (parity_of(field) == Parity::even) return fx + fy + fz + fw;
  return fx - fy - fz + fw;
}

SurfaceBundle build_G(const UniPoly& f) {
  if (parity_of(f.field()) != Parity::odd) throw std::invalid_argument("G is defined in odd characteristic");
  if (f.degree() < 2) throw std::invalid_argument("G requires deg f >= 2");
  SurfaceBundle b;
  b.f = f;
  b.parity = Parity::odd;
  const Field& field = f.field();
  b.surface = exact_divide(difference_numerator(f), trivial_denominator(field));
  const MultiPoly expansion = expand_phi_sum(f, 2, b.phi_terms);
  if (!(expansion == b.surface)) throw std::logic_error("G disagrees with its phi expansion");
  b.homogeneous = homogenize(b);
  return b;
}

SurfaceBundle build_H(const UniPoly& f) {
  if (parity_of(f.field()) != Parity::even) throw std::invalid_argument("H is defined in characteristic two");
  SurfaceBundle b;
  b.f = f;
  b.parity = Parity::even;
  const Field& field = f.field();
  b.surface = exact_divide(difference_numerator(f), trivial_denominator(field)) + one(field);
  const MultiPoly expansion = one(field) + expand_phi_sum(f, 3, b.phi_terms);
  if (!(expansion == b.surface)) throw std::logic_error("H disagrees with its phi expansion");
  b.homogeneous = homogenize(b);
  return b;
}

SurfaceBundle build_surface(const UniPoly& f) {
  return parity_of(f.field()) == Parity::even ? build_H(f) : build_G(f);
}

MultiPoly homogenize(const SurfaceBundle& bundle) {
  const Field& field = bundle.f.field();
  const int d = bundle.f.degree();
  const MultiPoly t = var(field, Var::T);
  MultiPoly out(field);
  if (bundle.parity == Parity::even) out += t.pow(static_cast<unsigned>(std::max(d, 2) - 2));
  for (const auto& [j, p] : bundle.phi_terms) {
    out += p.scale(bundle.f.coeff(j)) * t.pow(static_cast<unsigned>(d - static_cast<int>(j)));
  }
  return out;
}

MultiPoly section_at_infinity(const MultiPoly& homogeneous) {
  return substitute(homogeneous, {{Var::T, MultiPoly(homogeneous.field())}});
}

FieldElement raw_form_value(const UniPoly& f, const FieldElement& x, const FieldElement& y, const FieldElement& w,
                            const Embedding& embedding) {
  if (x == y || w.is_zero()) throw std::domain_error("raw form is undefined at x = y or w = 0");
  auto ev = [&](const FieldElement& a) { return f.evaluate(a, embedding); };
  if (parity_of(f.field()) == Parity::even) {
    const FieldElement num = ev(x + w) + ev(x) + w * x + ev(y + w) + ev(y) + w * y;
    return num / ((x + y) * w);
  }
  return (ev(x + w) - ev(x) - ev(y + w) + ev(y)) / ((x - y) * w);
}

// --- structural identities -------------------------------------------------

IdentityCheck check_diagonal_formula(const Field& field, unsigned j) {
  IdentityCheck c;
  c.name = "diagonal-formula";
  c.parameters = "p=" + std::to_string(field.characteristic()) + ",j=" + std::to_string(j);
  const MultiPoly x = var(field, Var::X), z = var(field, Var::Z);
  const MultiPoly lhs = substitute(phi(j, field), {{Var::Y, x}});
  MultiPoly rhs(field);
  if (j >= 1) rhs = exact_divide(x.pow(j - 1) - z.pow(j - 1), x - z).scale(field.from_int(j));
  c.pass = lhs == rhs;
  c.witness = "phi_j(X,X,Z)=" + describe_poly(lhs) + " rhs=" + describe_poly(rhs);
  return c;
}

IdentityCheck check_diagonal_coprime(const Field& field, unsigned j, unsigned k) {
  const std::uint32_t p = field.characteristic();
  IdentityCheck c;
  c.name = "diagonal-coprime";
  c.parameters = "p=" + std::to_string(p) + ",k=" + std::to_string(k) + ",j=" + std::to_string(j);
  if (j % p == 0 || (j - 1) % p == 0) throw std::invalid_argument("coprimality needs p !| j and p !| j-1");
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  const MultiPoly x = var(field, Var::X), z = var(field, Var::Z);
  const Substitution diag{{Var::Y, x}};
  const MultiPoly dj = substitute(phi(j, field), diag);
  const auto mult = divides_with_multiplicity(dj, x - z);
  const MultiPoly g = restriction_gcd(phi(j, field), phi(static_cast<unsigned>(pk + 1), field), diag);
  const bool not_divisible = mult.has_value() && *mult == 0;
  const bool coprime = g.is_constant() && !g.is_zero();
  c.pass = not_divisible && coprime;
  c.witness = "mult(X-Z)=" + (mult ? std::to_string(*mult) : std::string("inf")) + " gcd=" + describe_poly(g);
  return c;
}

MultiPoly square_free_psi(std::uint32_t p, unsigned k) {
  const Field field = make_field(p, 1);
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i) e *= p;
  return phi_numerator(static_cast<unsigned>(e + 1), field);
}

IdentityCheck check_square_free(std::uint32_t p, unsigned k) {
  IdentityCheck c;
  c.name = "square-free";
  c.parameters = "p=" + std::to_string(p) + ",k=" + std::to_string(k);
  const SquareFreeCertificate cert = is_square_free_trivariate(square_free_psi(p, k));
  c.pass = cert.holds();
  std::ostringstream os;
  os << "gcd(psi,dpsi/dY)=" << cert.gcd_with_dy.to_string() << (cert.dy_condition ? " [free of Y]" : " [involves Y]")
     << " gcd(psi,dpsi/dZ)=" << cert.gcd_with_dz.to_string() << (cert.dz_condition ? " [free of Z]" : " [involves Z]")
     << (cert.x_condition ? " X does not divide psi" : " X divides psi");
  c.witness = os.str();
  return c;
}

IdentityCheck check_odd_degree_component(const Field& field, unsigned d) {
  IdentityCheck c;
  c.name = "odd-degree-component";
  c.parameters = "p=" + std::to_string(field.characteristic()) + ",d=" + std::to_string(d);
  if (d % 2 == 0) throw std::invalid_argument("odd-degree check needs odd d");
  const MultiPoly yz = var(field, Var::Y) + var(field, Var::Z);
  const auto mult = divides_with_multiplicity(phi(d, field), yz);
  c.pass = mult.has_value() && *mult == 1;
  c.witness = "mult(Y+Z)=" + (mult ? std::to_string(*mult) : std::string("inf (phi_d = 0)"));
  return c;
}

IdentityCheck check_doubling_identity(unsigned d) {
  IdentityCheck c;
  c.name = "doubling-identity";
  c.parameters = "p=2,d=" + std::to_string(d);
  if (d % 4 != 2) throw std::invalid_argument("doubling identity needs d = 2 mod 4");
  const Field f2 = make_field(2, 1);
  const unsigned e = d / 2;
  const MultiPoly lhs = phi(d, f2);
  const MultiPoly rhs = phi(e, f2).pow(2) * trivial_denominator(f2);
  const auto mult = divides_with_multiplicity(lhs, var(f2, Var::X) + var(f2, Var::Y));
  c.pass = lhs == rhs && mult.has_value() && *mult == 1;
  c.witness = std::string(lhs == rhs ? "phi_d == phi_e^2 (X+Y)(X+Z)" : "phi_d != phi_e^2 (X+Y)(X+Z)") +
              " mult(X+Y)=" + (mult ? std::to_string(*mult) : std::string("inf"));
  return c;
}

IdentityCheck check_trivial_nondivisibility(const UniPoly& f) {
  const Field& field = f.field();
  IdentityCheck c;
  c.name = "trivial-nondivisibility";
  c.parameters = "field=" + field.describe() + ",f=" + f.to_string();
  if (parity_of(field) == Parity::odd && f.derivative().degree() < 1) {
    throw std::invalid_argument("nondivisibility check needs f' nonconstant");
  }
  const SurfaceBundle b = build_surface(f);
  const MultiPoly x = var(field, Var::X);
  const auto my = divides_with_multiplicity(b.surface, x - var(field, Var::Y));
  const auto mz = divides_with_multiplicity(b.surface, x - var(field, Var::Z));
  const bool xxz = !substitute(b.surface, {{Var::Y, x}}).is_zero();
  const bool xyx = !substitute(b.surface, {{Var::Z, x}}).is_zero();
  c.pass = my == 0u && mz == 0u && xxz && xyx;
  auto show = [](const std::optional<unsigned>& m) { return m ? std::to_string(*m) : std::string("inf"); };
  c.witness = "mult(X-Y)=" + show(my) + " mult(X-Z)=" + show(mz);
  return c;
}

std::vector<IdentityCheck> verify_structural_identities(std::uint32_t p, const IdentityRange& range) {
  const Field field = make_field(p, 1);
  std::vector<IdentityCheck> out;
  for (unsigned j = 2; j <= range.max_j; ++j) out.push_back(check_diagonal_formula(field, j));
  if (p != 2) {
    const std::uint64_t max_j = std::uint64_t{p} * p + 1;
    for (unsigned j = 2; j <= max_j; ++j) {
      if (j % p != 0 && (j - 1) % p != 0) out.push_back(check_diagonal_coprime(field, j, range.k));
    }
    out.push_back(check_square_free(p, range.k));
  } else {
    for (unsigned d : range.doubling_degrees) out.push_back(check_doubling_identity(d));
  }
  // Y + Z is a simple component of phi_d only when p does not divide d.
  for (unsigned d = 3; d <= range.max_odd_degree; d += 2)
    if (d % p != 0) out.push_back(check_odd_degree_component(field, d));
  return out;
}

}  // namespace planarlab
