// Sparse polynomials in X, Y, Z, T over a finite field.
//
// Terms are kept in a map keyed by exponent vectors in graded lexicographic
// order (X > Y > Z > T, largest first), with no zero coefficients, so equal
// polynomials have identical term maps.

#ifndef PLANARLAB_MULTIPOLY_HPP
#define PLANARLAB_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planarlab/gf.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

enum class Var : unsigned { X = 0, Y = 1, Z = 2, T = 3 };
inline constexpr std::array<Var, 4> kAllVars{Var::X, Var::Y, Var::Z, Var::T};

std::string var_name(Var v);

using Exponents = std::array<std::uint16_t, 4>;

/// a precedes b iff a is larger in graded lex order.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponents, FieldElement, GrlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(Field field) : field_(field) {}

  static MultiPoly variable(Field field, Var v);
  static MultiPoly constant(Field field, FieldElement c);
  static MultiPoly term(Field field, Exponents e, FieldElement c);
  /// u(v) as a polynomial in the single variable v.
  static MultiPoly from_unipoly(const UniPoly& u, Var v);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(Var v) const;
  bool involves(Var v) const { return degree_in(v) > 0; }
  bool is_homogeneous() const;
  FieldElement coefficient(const Exponents& e) const;
  /// Leading term in graded lex order; the polynomial must be nonzero.
  const std::pair<const Exponents, FieldElement>& leading_term() const;

  MultiPoly scale(const FieldElement& c) const;
  MultiPoly pow(unsigned e) const;
  /// Scaled so the leading coefficient is 1 (zero stays zero).
  MultiPoly normalized() const;
  /// Coefficients as a polynomial in v: element i multiplies v^i and does not involve v.
  std::vector<MultiPoly> coefficients_in(Var v) const;
  /// Restriction to a single variable; throws if any other variable occurs.
  UniPoly to_unipoly(Var v) const;

  FieldElement evaluate(const std::array<FieldElement, 4>& point) const;
  /// Coefficients embedded into the point's field.
  FieldElement evaluate(const std::array<FieldElement, 4>& point, const Embedding& e) const;
  MultiPoly embedded(const Embedding& e) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// "eX.eY.eZ.eT:c+..." in canonical order; coefficients as element indices.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, std::uint32_t code);
  Field field_;
  Terms terms_;
};

/// Parses the to_string() format. Repeated monomials are summed.
MultiPoly parse_multipoly(const Field& field, std::string_view text);

/// Simultaneous substitution; unbound variables are kept.
using Substitution = std::map<Var, MultiPoly>;
MultiPoly substitute(const MultiPoly& f, const Substitution& bindings);

MultiPoly partial_derivative(const MultiPoly& f, Var v);

struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};
/// Leading-term division in graded lex order. The remainder is zero iff den divides num.
DivisionResult divide(const MultiPoly& num, const MultiPoly& den);

/// Synthetic division by a polynomial of total degree 1, as a polynomial in
/// its leading variable.
DivisionResult divide_by_linear(const MultiPoly& num, const MultiPoly& linear);

/// Exact quotient, verified by multiplication. Throws std::domain_error on a
/// nonzero remainder.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

/// Largest m with linear^m | f; std::nullopt (infinite) when f is zero.
std::optional<unsigned> divides_with_multiplicity(const MultiPoly& f, const MultiPoly& linear);

/// Normalized gcd in F[X,Y,Z,T] via recursive primitive pseudo-remainder sequences,
/// with the variables taken as main variables in the given order.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b, std::span<const Var> order = kAllVars);

/// gcd of the restrictions of f and g under the assignments, which must leave
/// at most two variables. With two survivors both restrictions must be
/// homogeneous; the lexicographically last survivor is set to 1, the gcd is
/// taken in one variable, and its power of the last survivor is restored.
MultiPoly restriction_gcd(const MultiPoly& f, const MultiPoly& g, const Substitution& assignments);

/// The sufficient conditions for square-freeness of a trivariate psi:
/// gcd(psi, d psi/dY) free of Y, gcd(psi, d psi/dZ) free of Z, and X not dividing psi.
struct SquareFreeCertificate {
  MultiPoly gcd_with_dy;
  bool dy_condition = false;
  MultiPoly gcd_with_dz;
  bool dz_condition = false;
  bool x_condition = false;
  bool holds() const { return dy_condition && dz_condition && x_condition; }
};
SquareFreeCertificate is_square_free_trivariate(const MultiPoly& f);

}  // namespace planarlab

#endif  // PLANARLAB_MULTIPOLY_HPP
