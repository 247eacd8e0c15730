#include "planarlab/pointcount.hpp"

#include <algorithm>
#include <cmath>

#include "planarlab/parallel.hpp"

namespace planarlab {

namespace {

struct Term {
  std::uint16_t ex, ey, ez;
  std::uint32_t coeff;
};

// pow[v * stride + e] = v^e over the field.
std::vector<std::uint32_t> power_table(const Field& field, unsigned max_exp) {
  const std::uint64_t q = field.size();
  const unsigned stride = max_exp + 1;
  std::vector<std::uint32_t> out(q * stride);
  for (std::uint64_t v = 0; v < q; ++v) {
    std::uint32_t acc = 1;
    for (unsigned e = 0; e <= max_exp; ++e) {
      out[v * stride + e] = acc;
      acc = field.mul(acc, static_cast<std::uint32_t>(v));
    }
  }
  return out;
}

std::uint64_t cube_checked(std::uint64_t q, std::uint64_t guard) {
  const long double cube = static_cast<long double>(q) * q * q;
  if (cube > static_cast<long double>(guard)) {
    throw GuardExceeded("(q^r)^3 = " + std::to_string(q) + "^3 exceeds the count guard " + std::to_string(guard));
  }
  return q * q * q;
}

std::uint64_t field_size_checked(const Field& base, unsigned r) {
  if (r < 1) throw std::invalid_argument("extension degree r must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= base.size();
    if (q > (std::uint64_t{1} << 22)) throw GuardExceeded("q^r too large to enumerate");
  }
  return q;
}

}  // namespace

ZeroRecord count_zeros(const MultiPoly& surface, unsigned r, const CountOptions& options) {
  if (surface.involves(Var::T)) throw std::invalid_argument("surface must be a polynomial in X, Y, Z");
  cube_checked(field_size_checked(surface.field(), r), options.guard);
  const Extension ext = make_extension(surface.field(), r);
  const Field& field = ext.field;
  const std::uint64_t q = field.size();

  // Terms grouped by the exponent of Z, for Horner in z.
  const int deg_z = std::max(0, surface.degree_in(Var::Z));
  std::vector<std::vector<Term>> by_z(static_cast<std::size_t>(deg_z) + 1);
  unsigned max_xy = 0;
  for (const auto& [e, c] : surface.terms()) {
    by_z[e[2]].push_back({e[0], e[1], e[2], ext.embedding.map_code(c.code())});
    max_xy = std::max<unsigned>(max_xy, std::max(e[0], e[1]));
  }
  const unsigned stride = max_xy + 1;
  const auto pw = power_table(field, max_xy);

  struct Partial {
    std::uint64_t total = 0, trivial = 0;
    bool has_witness = false;
    std::array<std::uint32_t, 3> witness{};
  };
  const unsigned workers = std::max(1u, options.threads);
  std::vector<Partial> partial(workers);
  parallel_ranges(q, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    Partial& out = partial[w];
    std::vector<std::uint32_t> coeff(by_z.size());
    for (std::uint64_t x = begin; x < end; ++x) {
      const std::uint32_t* px = &pw[x * stride];
      for (std::uint64_t y = 0; y < q; ++y) {
        const std::uint32_t* py = &pw[y * stride];
        for (std::size_t k = 0; k < by_z.size(); ++k) {
          std::uint32_t acc = 0;
          for (const Term& t : by_z[k]) acc = field.add(acc, field.mul(t.coeff, field.mul(px[t.ex], py[t.ey])));
          coeff[k] = acc;
        }
        for (std::uint64_t z = 0; z < q; ++z) {
          std::uint32_t v = 0;
          for (std::size_t k = coeff.size(); k-- > 0;) v = field.add(field.mul(v, static_cast<std::uint32_t>(z)), coeff[k]);
          if (v != 0) continue;
          ++out.total;
          if (x == y || x == z) {
            ++out.trivial;
          } else if (!out.has_witness) {
            out.has_witness = true;
            out.witness = {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(z)};
          }
        }
      }
    }
  });

  ZeroRecord rec;
  rec.r = r;
  for (const auto& p : partial) {
    rec.total_zeros += p.total;
    rec.trivial_zeros += p.trivial;
    if (p.has_witness && !rec.first_witness) {
      rec.first_witness = std::array<FieldElement, 3>{FieldElement(field, p.witness[0]),
                                                      FieldElement(field, p.witness[1]),
                                                      FieldElement(field, p.witness[2])};
    }
  }
  rec.nontrivial_zeros = rec.total_zeros - rec.trivial_zeros;
  return rec;
}

ZeroRecord count_zeros(const SurfaceBundle& bundle, unsigned r, const CountOptions& options) {
  return count_zeros(bundle.surface, r, options);
}

SurfaceReport surface_report(const SurfaceBundle& bundle, std::span<const unsigned> extensions,
                             const CountOptions& options) {
  SurfaceReport report;
  report.f_description = bundle.f.to_string();
  report.base_field = bundle.f.field().describe();
  report.parity = bundle.parity;
  const double q = static_cast<double>(bundle.f.field().size());
  for (unsigned r : extensions) {
    report.records.push_back(count_zeros(bundle, r, options));
    report.growth_ratios.push_back(static_cast<double>(report.records.back().total_zeros) / std::pow(q, 2.0 * r));
  }
  return report;
}

GrowthDiagnostic growth_diagnostic(const SurfaceReport& report) {
  if (report.records.size() < 3) throw std::invalid_argument("growth diagnostic needs at least three extension degrees");
  const double q = static_cast<double>(parse_field(report.base_field).size());
  GrowthDiagnostic g;
  std::size_t last = 0;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    g.r.push_back(rec.r);
    g.ratios.push_back(static_cast<double>(rec.total_zeros) / std::pow(q, 2.0 * rec.r));
    if (rec.r > report.records[last].r) last = i;
  }
  for (double ratio : g.ratios) g.max_deviation = std::max(g.max_deviation, std::abs(ratio - g.ratios[last]));
  return g;
}

DiagonalBound diagonal_zero_bound_check(const MultiPoly& surface, unsigned r, const CountOptions& options) {
  const Field& base = surface.field();
  const MultiPoly x = MultiPoly::variable(base, Var::X);
  const MultiPoly xxz = substitute(surface, {{Var::Y, x}});
  const MultiPoly xyx = substitute(surface, {{Var::Z, x}});
  if (xxz.is_zero() || xyx.is_zero()) throw std::domain_error("diagonal restriction is the zero polynomial");
  const std::uint64_t q = field_size_checked(base, r);
  if (q * q > options.guard) throw GuardExceeded("(q^r)^2 exceeds the count guard");
  const Extension ext = make_extension(base, r);
  const Field& field = ext.field;

  // Zeros of a polynomial in X and one other variable `other` over F_Q^2.
  auto count2 = [&](const MultiPoly& p, Var other) {
    std::vector<Term> terms;
    unsigned max_e = 0;
    for (const auto& [e, c] : p.terms()) {
      const auto eo = e[static_cast<unsigned>(other)];
      terms.push_back({e[0], eo, 0, ext.embedding.map_code(c.code())});
      max_e = std::max<unsigned>(max_e, std::max<unsigned>(e[0], eo));
    }
    const unsigned stride = max_e + 1;
    const auto pw = power_table(field, max_e);
    const unsigned workers = std::max(1u, options.threads);
    std::vector<std::uint64_t> counts(workers, 0);
    parallel_ranges(q, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t a = begin; a < end; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
          std::uint32_t acc = 0;
          for (const Term& t : terms) acc = field.add(acc, field.mul(t.coeff, field.mul(pw[a * stride + t.ex], pw[b * stride + t.ey])));
          if (acc == 0) ++counts[w];
        }
      }
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
  };

  DiagonalBound out;
  out.r = r;
  out.zeros_xxz = count2(xxz, Var::Z);
  out.zeros_xyx = count2(xyx, Var::Y);
  out.bound = q * static_cast<std::uint64_t>(std::max(0, surface.total_degree()));
  out.holds = out.zeros_xxz <= out.bound && out.zeros_xyx <= out.bound;
  return out;
}

DiagonalBound diagonal_zero_bound_check(const SurfaceBundle& bundle, unsigned r, const CountOptions& options) {
  return diagonal_zero_bound_check(bundle.surface, r, options);
}

}  // namespace planarlab
