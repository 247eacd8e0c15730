#include "planarlab/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "planarlab/parallel.hpp"

namespace planarlab {

namespace {

bool dropped(unsigned e, std::uint32_t p, const NormalizationFlags& flags) {
  if (e == 0) return flags.zero_constant;
  if (e == 1 && flags.drop_linear) return true;
  return flags.drop_p_power && is_power_of(e, p);
}

// Choices per exponent 0..d, as a list of allowed element indices.
std::vector<std::vector<std::uint32_t>> coefficient_choices(const SearchSpec& spec) {
  if (!spec.field.valid()) throw std::invalid_argument("search needs a field");
  if (spec.degree == 0) throw std::invalid_argument("search degree must be at least 1");
  const auto q = static_cast<std::uint32_t>(spec.field.size());
  const std::uint32_t p = spec.field.characteristic();
  std::vector<std::vector<std::uint32_t>> out(spec.degree + 1);
  for (unsigned e = 0; e < spec.degree; ++e) {
    if (dropped(e, p, spec.flags)) {
      out[e] = {0};
    } else {
      for (std::uint32_t c = 0; c < q; ++c) out[e].push_back(c);
    }
  }
  if (spec.flags.monic) {
    out[spec.degree] = {1};
  } else {
    for (std::uint32_t c = 1; c < q; ++c) out[spec.degree].push_back(c);
  }
  return out;
}

UniPoly element_at(const Field& field, const std::vector<std::vector<std::uint32_t>>& choices, std::uint64_t index) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(choices.size());
  for (const auto& c : choices) {
    coeffs.push_back(field.element(c[index % c.size()]));
    index /= c.size();
  }
  return UniPoly(field, std::move(coeffs));
}

}  // namespace

UniPoly normalize(const UniPoly& f, const NormalizationFlags& flags) {
  const std::uint32_t p = f.field().characteristic();
  std::vector<FieldElement> coeffs = f.coeffs();
  for (unsigned e = 0; e < coeffs.size(); ++e) {
    if (dropped(e, p, flags)) coeffs[e] = f.field().zero();
  }
  UniPoly g(f.field(), std::move(coeffs));
  if (flags.monic && !g.is_zero()) g = g.monic();
  return g;
}

std::uint64_t search_space_size(const SearchSpec& spec) {
  std::uint64_t size = 1;
  for (const auto& c : coefficient_choices(spec)) {
    if (size > (std::uint64_t{1} << 62) / c.size()) return std::uint64_t{1} << 62;
    size *= c.size();
  }
  return size;
}

UniPoly search_space_element(const SearchSpec& spec, std::uint64_t index) {
  return element_at(spec.field, coefficient_choices(spec), index);
}

bool is_affine_ea_variant(const UniPoly& f, const UniPoly& g) {
  if (!(f.field() == g.field()) || f.degree() != g.degree() || f.degree() < 1) return false;
  const Field& field = f.field();
  for (std::uint64_t ci = 1; ci < field.size(); ++ci) {
    for (std::uint64_t ei = 0; ei < field.size(); ++ei) {
      const UniPoly affine(field, {field.element(ei), field.element(ci)});
      const UniPoly h = f.compose(affine);
      const FieldElement a = g.leading() / h.leading();
      if (is_p_power_polynomial(g - h.scale(a))) return true;
    }
  }
  return false;
}

SearchResult run_search(const SearchSpec& spec) {
  if (spec.extensions.empty()) throw std::invalid_argument("search needs at least one extension degree");
  const auto choices = coefficient_choices(spec);
  SearchResult result;
  result.space_size = search_space_size(spec);
  if (result.space_size > spec.guard) {
    throw GuardExceeded("search space has " + std::to_string(result.space_size) + " polynomials, guard is " +
                        std::to_string(spec.guard));
  }

  struct Partial {
    std::uint64_t tested = 0, skipped = 0;
    std::vector<Survivor> survivors;
  };
  const unsigned workers = std::max(1u, spec.threads);
  std::vector<Partial> partial(workers);
  CheckOptions check;
  check.threads = 1;
  check.guard = spec.planar_guard;

  parallel_ranges(result.space_size, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    Partial& out = partial[w];
    for (std::uint64_t i = begin; i < end; ++i) {
      UniPoly f = element_at(spec.field, choices, i);
      DegreeClass dc = degree_class(f);
      if (spec.prune == PruneMode::strict && dc.verdict == FilterVerdict::excluded) {
        ++out.skipped;
        continue;
      }
      ++out.tested;
      std::vector<PlanarityVerdict> verdicts;
      bool planar = true;
      for (unsigned r : spec.extensions) {
        verdicts.push_back(is_planar(f, r, check));
        if (!verdicts.back().planar) {
          planar = false;
          break;
        }
      }
      if (!planar) continue;
      out.survivors.push_back({std::move(f), std::move(dc), std::move(verdicts), std::nullopt});
    }
  });

  for (auto& part : partial) {
    result.tested += part.tested;
    result.skipped_by_prune += part.skipped;
    for (auto& s : part.survivors) result.survivors.push_back(std::move(s));
  }
  for (const auto& s : result.survivors) {
    if (s.degree_class.verdict == FilterVerdict::excluded) ++result.excluded_survivors;
  }
  if (spec.prune == PruneMode::off) {
    for (auto& s : result.survivors) {
      s.degree_class.verdict = FilterVerdict::not_applicable;
      s.degree_class.note = "pruning off";
    }
  }

  if (result.survivors.size() <= spec.ea_check_cap) {
    result.ea_check_ran = true;
    for (std::size_t j = 0; j < result.survivors.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (result.survivors[i].ea_variant_of) continue;
        if (is_affine_ea_variant(result.survivors[i].poly, result.survivors[j].poly)) {
          result.survivors[j].ea_variant_of = i;
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace planarlab
