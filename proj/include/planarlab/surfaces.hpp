// Difference surfaces of a polynomial f and their building blocks phi_j.
//
// Odd characteristic:
//   phi_j = (X^j - Y^j - Z^j + (-X+Y+Z)^j) / ((X-Y)(X-Z))
//   G     = (f(X) - f(Y) - f(Z) + f(-X+Y+Z)) / ((X-Y)(X-Z)) = sum_{j>=2} a_j phi_j
// Characteristic two:
//   phi_j = (X^j + Y^j + Z^j + (X+Y+Z)^j) / ((X+Y)(X+Z))
//   H     = (f(X) + f(Y) + f(Z) + f(X+Y+Z)) / ((X+Y)(X+Z)) + 1 = 1 + sum_{j>=3} a_j phi_j
//
// f induces a planar function on F_{q^r} iff every F_{q^r}-rational zero of
// G (resp. H) lies on X = Y or X = Z.

#ifndef PLANARLAB_SURFACES_HPP
#define PLANARLAB_SURFACES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planarlab/gf.hpp"
#include "planarlab/multipoly.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

enum class Parity { odd, even };

inline Parity parity_of(const Field& f) { return f.characteristic() == 2 ? Parity::even : Parity::odd; }
std::string to_string(Parity p);

/// phi_j over the given field (its characteristic selects the variant).
/// Zero for j in {0, 1} (odd) and j in {0, 1, 2} (even). Cached per (field, j).
MultiPoly phi(unsigned j, const Field& field);

/// The numerator whose exact quotient is phi_j.
MultiPoly phi_numerator(unsigned j, const Field& field);

/// (X-Y)(X-Z), or (X+Y)(X+Z) in characteristic two.
MultiPoly trivial_denominator(const Field& field);

/// f(X) - f(Y) - f(Z) + f(-X+Y+Z), or f(X) + f(Y) + f(Z) + f(X+Y+Z) in characteristic two.
MultiPoly difference_numerator(const UniPoly& f);

struct SurfaceBundle {
  UniPoly f;
  Parity parity = Parity::odd;
  /// G (odd) or H (even), in X, Y, Z.
  MultiPoly surface;
  /// The homogenization in X, Y, Z, T.
  MultiPoly homogeneous;
  /// phi_j for every j that contributes (a_j != 0, j >= 2 odd / j >= 3 even).
  std::map<unsigned, MultiPoly> phi_terms;
};

/// Odd characteristic, deg f >= 2. Builds G by exact division and checks it
/// against the phi expansion.
SurfaceBundle build_G(const UniPoly& f);
/// Characteristic two. Builds H by exact division plus 1 and checks it
/// against 1 + sum a_j phi_j.
SurfaceBundle build_H(const UniPoly& f);
/// build_G or build_H by characteristic.
SurfaceBundle build_surface(const UniPoly& f);

/// sum a_j phi_j T^{d-j} (odd), T^{d-2} + sum_{j>=3} a_j phi_j T^{d-j} (even).
/// Homogeneous of degree d-2; T = 1 gives the affine surface back.
MultiPoly homogenize(const SurfaceBundle& bundle);

/// The hyperplane section T = 0 of a polynomial in X, Y, Z, T.
MultiPoly section_at_infinity(const MultiPoly& homogeneous);

/// The raw three-variable form F(x, y, w) evaluated pointwise at x != y, w != 0:
/// (f(x+w) - f(x) - f(y+w) + f(y)) / ((x-y) w) for odd q, and
/// (f(x+w) + f(x) + wx + f(y+w) + f(y) + wy) / ((x+y) w) for even q.
FieldElement raw_form_value(const UniPoly& f, const FieldElement& x, const FieldElement& y, const FieldElement& w,
                            const Embedding& embedding);

// --- structural identities -------------------------------------------------

struct IdentityCheck {
  std::string name;
  std::string parameters;
  bool pass = false;
  std::string witness;
};

/// phi_j(X,X,Z) = j (X^{j-1} - Z^{j-1}) / (X - Z).
IdentityCheck check_diagonal_formula(const Field& field, unsigned j);
/// For p !| j and p !| j-1: X - Z does not divide phi_j(X,X,Z), and
/// phi_j(X,X,Z), phi_{p^k+1}(X,X,Z) are coprime.
IdentityCheck check_diagonal_coprime(const Field& field, unsigned j, unsigned k);
/// The square-freeness certificate for psi = X^{p^k+1} - Y^{p^k+1} - Z^{p^k+1} + (-X+Y+Z)^{p^k+1}.
IdentityCheck check_square_free(std::uint32_t p, unsigned k);
/// For odd d: Y + Z divides phi_d exactly once.
IdentityCheck check_odd_degree_component(const Field& field, unsigned d);
/// For d = 2 mod 4 over F_2: phi_d = phi_e^2 (X+Y)(X+Z) with e = d/2, and X + Y divides phi_d exactly once.
IdentityCheck check_doubling_identity(unsigned d);

/// G (resp. H) is not divisible by X - Y or X - Z, so G(X,X,Z) and G(X,Y,X) are nonzero.
/// Odd characteristic needs f' nonconstant; throws std::invalid_argument otherwise.
IdentityCheck check_trivial_nondivisibility(const UniPoly& f);

/// The psi polynomial of check_square_free.
MultiPoly square_free_psi(std::uint32_t p, unsigned k);

struct IdentityRange {
  unsigned max_j = 20;          // diagonal formula: 2 <= j <= max_j
  unsigned k = 1;               // coprimality and square-freeness exponent
  unsigned max_odd_degree = 19; // odd-degree component: odd 3 <= d <= max
  std::vector<unsigned> doubling_degrees{6, 10, 14};
};

/// Runs every identity that applies to characteristic p over F_p.
std::vector<IdentityCheck> verify_structural_identities(std::uint32_t p, const IdentityRange& range = {});

}  // namespace planarlab

#endif  // PLANARLAB_SURFACES_HPP
