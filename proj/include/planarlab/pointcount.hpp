// Exact F_{q^r}-rational zero counts of difference surfaces.

#ifndef PLANARLAB_POINTCOUNT_HPP
#define PLANARLAB_POINTCOUNT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planarlab/multipoly.hpp"
#include "planarlab/surfaces.hpp"

namespace planarlab {

inline constexpr std::uint64_t kDefaultCountGuard = std::uint64_t{1} << 26;

struct CountOptions {
  unsigned threads = 1;
  /// Largest (q^r)^3 that will be enumerated.
  std::uint64_t guard = kDefaultCountGuard;
};

struct ZeroRecord {
  unsigned r = 1;
  std::uint64_t total_zeros = 0;
  /// Zeros with x = y or x = z, each counted once.
  std::uint64_t trivial_zeros = 0;
  std::uint64_t nontrivial_zeros = 0;
  /// First nontrivial zero (x, y, z) in enumeration order.
  std::optional<std::array<FieldElement, 3>> first_witness;
};

struct SurfaceReport {
  std::string f_description;
  std::string base_field;
  Parity parity = Parity::odd;
  std::vector<ZeroRecord> records;
  /// total_zeros / q^{2r} per record.
  std::vector<double> growth_ratios;
};

/// Counts zeros over F_{q^r} of a polynomial in X, Y, Z over F_q.
ZeroRecord count_zeros(const MultiPoly& surface, unsigned r, const CountOptions& options = {});
ZeroRecord count_zeros(const SurfaceBundle& bundle, unsigned r, const CountOptions& options = {});

SurfaceReport surface_report(const SurfaceBundle& bundle, std::span<const unsigned> extensions,
                             const CountOptions& options = {});

struct GrowthDiagnostic {
  std::vector<unsigned> r;
  std::vector<double> ratios;
  /// max_r |ratio_r - ratio_{r_max}|.
  double max_deviation = 0.0;
};

/// Needs at least three counted extension degrees. Diagnostic only.
GrowthDiagnostic growth_diagnostic(const SurfaceReport& report);

struct DiagonalBound {
  unsigned r = 1;
  std::uint64_t zeros_xxz = 0;  // zeros of S(X,X,Z) in F_{q^r}^2
  std::uint64_t zeros_xyx = 0;  // zeros of S(X,Y,X)
  std::uint64_t bound = 0;      // q^r * deg S
  bool holds = false;
};

/// Checks #zeros of S(X,X,Z) and S(X,Y,X) are at most q^r deg S.
/// Throws std::domain_error if either restriction is the zero polynomial.
DiagonalBound diagonal_zero_bound_check(const MultiPoly& surface, unsigned r, const CountOptions& options = {});
DiagonalBound diagonal_zero_bound_check(const SurfaceBundle& bundle, unsigned r, const CountOptions& options = {});

}  // namespace planarlab

#endif  // PLANARLAB_POINTCOUNT_HPP
