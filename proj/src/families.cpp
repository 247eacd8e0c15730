#include "planarlab/families.hpp"

#include <numeric>
#include <stdexcept>

namespace planarlab {

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::p_power_plus_one: return "p-power-plus-one";
    case FamilyTag::coulter_matthews_half: return "coulter-matthews-half";
    case FamilyTag::ding_yuan: return "ding-yuan";
    case FamilyTag::char2_p_power: return "char2-p-power";
  }
  return "?";
}

FamilyTag parse_family_tag(std::string_view text) {
  for (auto tag : {FamilyTag::p_power_plus_one, FamilyTag::coulter_matthews_half, FamilyTag::ding_yuan,
                   FamilyTag::char2_p_power}) {
    if (to_string(tag) == text) return tag;
  }
  throw std::invalid_argument("unknown family tag '" + std::string(text) + "'");
}

std::string to_string(Prediction p) {
  switch (p) {
    case Prediction::planar: return "planar";
    case Prediction::not_planar: return "not-planar";
    case Prediction::no_claim: return "no-claim";
  }
  return "?";
}

Prediction FamilyInstance::predicted(unsigned r) const {
  // Absolute extension degree of F_{q^r} over F_p.
  const unsigned m = polynomial.field().degree() * r;
  auto as = [](bool b) { return b ? Prediction::planar : Prediction::not_planar; };
  switch (tag) {
    case FamilyTag::p_power_plus_one: {
      const unsigned g = std::gcd(params.k, m);
      return as((m / g) % 2 == 1);
    }
    case FamilyTag::coulter_matthews_half:
      return as(std::gcd(params.k, m) == 1);
    case FamilyTag::ding_yuan:
      return r % 2 == 1 ? Prediction::planar : Prediction::no_claim;
    case FamilyTag::char2_p_power:
      return Prediction::planar;
  }
  return Prediction::no_claim;
}

FamilyInstance family_instance(FamilyTag tag, const FamilyParams& params, const Field& base_field) {
  FamilyInstance inst;
  inst.tag = tag;
  inst.params = params;
  const std::uint32_t p = base_field.characteristic();
  switch (tag) {
    case FamilyTag::p_power_plus_one: {
      if (p == 2) throw std::invalid_argument("p-power-plus-one needs odd characteristic");
      std::uint64_t e = 1;
      for (unsigned i = 0; i < params.k; ++i) {
        e *= p;
        if (e > (1u << 20)) throw std::invalid_argument("p^k + 1 too large");
      }
      inst.polynomial = UniPoly::monomial(base_field, static_cast<unsigned>(e + 1));
      break;
    }
    case FamilyTag::coulter_matthews_half: {
      if (p != 3) throw std::invalid_argument("coulter-matthews-half needs characteristic 3");
      if (params.k % 2 == 0) throw std::invalid_argument("coulter-matthews-half needs odd k");
      std::uint64_t e = 1;
      for (unsigned i = 0; i < params.k; ++i) {
        e *= 3;
        if (e > (1u << 20)) throw std::invalid_argument("3^k too large");
      }
      inst.polynomial = UniPoly::monomial(base_field, static_cast<unsigned>((e + 1) / 2));
      break;
    }
    case FamilyTag::ding_yuan: {
      if (p != 3) throw std::invalid_argument("ding-yuan needs characteristic 3");
      if (params.n % 2 == 0) throw std::invalid_argument("ding-yuan needs odd n");
      const Field f = make_field(3, params.n);
      if (params.u >= f.size()) throw std::invalid_argument("u is not an element of F_{3^n}");
      const FieldElement u = f.element(params.u);
      inst.polynomial = UniPoly::monomial(f, 10) - UniPoly::monomial(f, 6, u) - UniPoly::monomial(f, 2, u * u);
      break;
    }
    case FamilyTag::char2_p_power: {
      if (p != 2) throw std::invalid_argument("char2-p-power needs characteristic 2");
      if (!params.poly) throw std::invalid_argument("char2-p-power needs a polynomial");
      if (!(params.poly->field() == base_field)) throw std::invalid_argument("polynomial is over another field");
      if (!is_p_power_polynomial(*params.poly)) {
        throw std::invalid_argument("char2-p-power polynomial has a nonconstant term of non-2-power degree");
      }
      inst.polynomial = *params.poly;
      break;
    }
  }
  return inst;
}

bool FamilyReport::ok() const {
  for (const auto& row : rows) {
    if (row.mismatch) return false;
  }
  return true;
}

FamilyReport verify_family(const FamilyInstance& instance, unsigned r_max, const CheckOptions& options) {
  FamilyReport report;
  report.instance = instance;
  for (unsigned r = 1; r <= r_max; ++r) {
    FamilyRow row;
    row.r = r;
    row.predicted = instance.predicted(r);
    row.verdict = is_planar(instance.polynomial, r, options);
    if (row.predicted != Prediction::no_claim) {
      row.mismatch = row.verdict.planar != (row.predicted == Prediction::planar);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace planarlab
