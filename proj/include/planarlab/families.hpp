// Known exceptional planar families and their planarity ranges.

#ifndef PLANARLAB_FAMILIES_HPP
#define PLANARLAB_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planarlab/gf.hpp"
#include "planarlab/planarity.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

enum class FamilyTag { p_power_plus_one, coulter_matthews_half, ding_yuan, char2_p_power };

std::string to_string(FamilyTag tag);
/// "p-power-plus-one", "coulter-matthews-half", "ding-yuan", "char2-p-power".
FamilyTag parse_family_tag(std::string_view text);

/// What the family's stated range says about F_{q^r}.
enum class Prediction { planar, not_planar, no_claim };
std::string to_string(Prediction p);

struct FamilyParams {
  unsigned k = 1;
  /// ding-yuan: u as an element index of F_{3^n}.
  std::uint32_t u = 0;
  /// ding-yuan: degree of the base field F_{3^n}; must be odd.
  unsigned n = 1;
  /// char2-p-power: the polynomial itself.
  std::optional<UniPoly> poly;
};

struct FamilyInstance {
  FamilyTag tag = FamilyTag::p_power_plus_one;
  FamilyParams params;
  UniPoly polynomial;

  /// Prediction for F_{q^r}, q the size of polynomial.field().
  Prediction predicted(unsigned r) const;
};

/// Throws std::invalid_argument on a wrong characteristic or bad parameters.
/// For ding-yuan the base field is built here as F_{3^n}; base_field is only
/// checked for characteristic 3.
FamilyInstance family_instance(FamilyTag tag, const FamilyParams& params, const Field& base_field);

struct FamilyRow {
  unsigned r = 1;
  Prediction predicted = Prediction::no_claim;
  PlanarityVerdict verdict;
  bool mismatch = false;
};

struct FamilyReport {
  FamilyInstance instance;
  std::vector<FamilyRow> rows;
  bool ok() const;
};

/// Compares the prediction with the planarity verdict for every 1 <= r <= r_max.
FamilyReport verify_family(const FamilyInstance& instance, unsigned r_max, const CheckOptions& options = {});

}  // namespace planarlab

#endif  // PLANARLAB_FAMILIES_HPP
