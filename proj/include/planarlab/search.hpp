// Exhaustive coefficient-space search for planar polynomials.

#ifndef PLANARLAB_SEARCH_HPP
#define PLANARLAB_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planarlab/gf.hpp"
#include "planarlab/planarity.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

inline constexpr std::uint64_t kDefaultSearchGuard = std::uint64_t{1} << 24;

struct NormalizationFlags {
  bool monic = false;
  bool zero_constant = false;
  /// Drops the X term only.
  bool drop_linear = false;
  /// Drops every term X^{p^i}, i >= 0.
  bool drop_p_power = false;
};

/// Applies the enabled moves in the order drop, zero constant, monic. Idempotent.
UniPoly normalize(const UniPoly& f, const NormalizationFlags& flags);

enum class PruneMode {
  off,       // no degree filters
  advisory,  // annotate survivors with the filter verdict
  strict,    // skip polynomials the filter excludes
};

struct SearchSpec {
  Field field;
  unsigned degree = 2;
  std::vector<unsigned> extensions{1};
  NormalizationFlags flags;
  PruneMode prune = PruneMode::advisory;
  unsigned threads = 1;
  std::uint64_t guard = kDefaultSearchGuard;
  /// Per-check guard passed to the planarity test.
  std::uint64_t planar_guard = kDefaultPlanarGuard;
  /// Largest survivor list the EA-variant post-pass will compare pairwise.
  std::size_t ea_check_cap = 512;
};

struct Survivor {
  UniPoly poly;
  DegreeClass degree_class;
  /// One verdict per tested extension degree, all planar.
  std::vector<PlanarityVerdict> verdicts;
  /// Index of an earlier survivor this one is an affine EA-variant of.
  std::optional<std::size_t> ea_variant_of;
};

struct SearchResult {
  std::uint64_t space_size = 0;
  std::uint64_t tested = 0;
  std::uint64_t skipped_by_prune = 0;
  /// Survivors whose degree class is excluded (advisory or off mode).
  std::uint64_t excluded_survivors = 0;
  bool ea_check_ran = false;
  std::vector<Survivor> survivors;
};

/// Size of the normalized coefficient space. Throws std::invalid_argument for degree 0.
std::uint64_t search_space_size(const SearchSpec& spec);
/// The polynomial at a given index of the normalized space.
UniPoly search_space_element(const SearchSpec& spec, std::uint64_t index);

/// Throws GuardExceeded when the space is larger than spec.guard.
SearchResult run_search(const SearchSpec& spec);

/// g = a f(c X + e) + L(X) for some a, c != 0, e and L with only p-power or constant terms.
bool is_affine_ea_variant(const UniPoly& f, const UniPoly& g);

}  // namespace planarlab

#endif  // PLANARLAB_SEARCH_HPP
