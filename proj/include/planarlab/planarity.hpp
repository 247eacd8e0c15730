// Definitional planarity and APN tests over F_{q^r}.

#ifndef PLANARLAB_PLANARITY_HPP
#define PLANARLAB_PLANARITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "planarlab/gf.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

inline constexpr std::uint64_t kDefaultPlanarGuard = std::uint64_t{1} << 20;

struct CheckOptions {
  unsigned threads = 1;
  /// Largest q^r that will be enumerated.
  std::uint64_t guard = kDefaultPlanarGuard;
};

struct PlanarityVerdict {
  std::string base_field;
  std::string field;  // F_{q^r}
  unsigned r = 1;
  bool planar = false;
  /// Smallest nonzero epsilon whose difference map is not a permutation.
  std::optional<FieldElement> failing_epsilon;
  /// Lexicographically first (a, b), a < b, with equal difference-map values at failing_epsilon.
  std::optional<std::pair<FieldElement, FieldElement>> colliding_pair;
};

/// x -> f(x+e) - f(x) permutes F_{q^r} for every nonzero e. Odd characteristic only.
PlanarityVerdict is_planar_odd(const UniPoly& f, unsigned r, const CheckOptions& options = {});
/// x -> f(x+e) + f(x) + e x permutes F_{q^r} for every nonzero e. Characteristic 2 only.
PlanarityVerdict is_planar_even(const UniPoly& f, unsigned r, const CheckOptions& options = {});
/// Dispatches on the characteristic.
PlanarityVerdict is_planar(const UniPoly& f, unsigned r, const CheckOptions& options = {});

struct ApnVerdict {
  std::string field;
  unsigned r = 1;
  bool apn = false;
  std::optional<FieldElement> failing_epsilon;
  /// A value of x -> f(x+e) + f(x) taken a number of times other than 0 or 2.
  std::optional<FieldElement> bad_value;
  std::uint64_t bad_multiplicity = 0;
};

/// Every nonzero-e map x -> f(x+e) + f(x) takes each value 0 or 2 times. Characteristic 2 only.
ApnVerdict apn_check(const UniPoly& f, unsigned r, const CheckOptions& options = {});
bool is_apn(const UniPoly& f, unsigned r, const CheckOptions& options = {});

/// True iff the values (one per field element) are pairwise distinct.
/// Throws if the length differs from the size of the values' field.
bool permutation_check(std::span<const FieldElement> values);

/// Recomputes the difference map at the reported epsilon and confirms the collision.
bool witness_is_valid(const UniPoly& f, const PlanarityVerdict& verdict);

namespace detail {

/// Planarity from a value table of f on F_Q (codes in enumeration order).
struct TableVerdict {
  bool planar = true;
  std::uint32_t epsilon = 0;
  std::uint32_t a = 0, b = 0;
};
TableVerdict planar_from_table(const Field& field, std::span<const std::uint32_t> table, unsigned threads);

}  // namespace detail

}  // namespace planarlab

#endif  // PLANARLAB_PLANARITY_HPP
