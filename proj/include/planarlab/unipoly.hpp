// Univariate polynomials over a finite field.

#ifndef PLANARLAB_UNIPOLY_HPP
#define PLANARLAB_UNIPOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planarlab/gf.hpp"

namespace planarlab {

class UniPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(Field field) : field_(field) {}
  /// coeffs[i] is the coefficient of X^i; trailing zeros are trimmed.
  UniPoly(Field field, std::vector<FieldElement> coeffs);

  static UniPoly monomial(Field field, unsigned exponent, FieldElement coeff);
  static UniPoly monomial(Field field, unsigned exponent) { return monomial(field, exponent, field.one()); }
  static UniPoly constant(Field field, FieldElement c) { return monomial(field, 0, c); }
  /// From (exponent, coefficient index) pairs.
  static UniPoly from_terms(Field field, const std::vector<std::pair<unsigned, std::uint32_t>>& terms);

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  FieldElement leading() const { return is_zero() ? field_.zero() : coeffs_.back(); }
  /// Exponents with nonzero coefficients, ascending.
  std::vector<unsigned> support() const;

  UniPoly monic() const;
  UniPoly scale(const FieldElement& c) const;
  UniPoly derivative() const;
  /// this(g(X)).
  UniPoly compose(const UniPoly& g) const;
  /// Image of the coefficients under an embedding.
  UniPoly embedded(const Embedding& e) const;

  FieldElement operator()(const FieldElement& x) const;
  /// Coefficients embedded into x's field first.
  FieldElement evaluate(const FieldElement& x, const Embedding& e) const;
  /// Values at every element of the field, in enumeration order, as raw codes.
  std::vector<std::uint32_t> value_table() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// "e:c,e:c,..." with exponents descending; coefficients as element indices.
  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<FieldElement> coeffs_;
};

FieldElement evaluate(const UniPoly& f, const FieldElement& x);
FieldElement evaluate(const UniPoly& f, const FieldElement& x, const Embedding& e);
UniPoly derivative(const UniPoly& f);

/// Quotient and remainder; the divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Parses "e:c,e:c,...". Repeated exponents are summed.
UniPoly parse_unipoly(const Field& field, std::string_view text);

/// True iff every nonconstant term has exponent p^i for some i >= 0.
bool is_p_power_polynomial(const UniPoly& f);
bool is_power_of(std::uint64_t value, std::uint64_t base);

/// Permutation of the field it is defined over, by exhaustive evaluation.
bool induces_permutation(const UniPoly& f);

/// g(X) = A1(f(A2(X))) + A3(X).
struct EATransform {
  UniPoly a1;
  UniPoly a2;
  UniPoly a3;

  static EATransform identity(const Field& field);
  /// Empty when valid, otherwise the first violated condition.
  std::optional<std::string> violation() const;
};

UniPoly ea_apply(const EATransform& t, const UniPoly& f);

/// Degree-based necessary conditions for exceptional planarity.
enum class DegreeFilter {
  residue_other,     // odd p, d mod p not in {0, 1}: only X^2 or X^{(3^k+1)/2} shapes survive
  residue_one,       // odd p, d = 1 mod p: monic form X^{p^k+1} + h with deg h constrained
  residue_zero,      // odd p, d = 0 mod p: no degree filter applies
  even_degree,       // p = 2: d in {1, 2} or 4 | d
};

enum class FilterVerdict { consistent, excluded, not_applicable };

struct DegreeClass {
  int degree = 0;
  std::uint32_t residue = 0;  // d mod p
  DegreeFilter filter = DegreeFilter::residue_zero;
  FilterVerdict verdict = FilterVerdict::not_applicable;
  /// Exponent k when the degree is p^k + 1 with k >= 1.
  std::optional<unsigned> pk_exponent;
  /// Degree of h = f/a_d - X^d for the residue_one filter; kZeroDegree if h = 0.
  std::optional<int> tail_degree;
  /// Monomial filter in characteristic two: a monomial must have 2-power degree.
  std::optional<FilterVerdict> monomial_verdict;
  std::string note;
};

DegreeClass degree_class(const UniPoly& f);

std::string to_string(DegreeFilter f);
std::string to_string(FilterVerdict v);

}  // namespace planarlab

#endif  // PLANARLAB_UNIPOLY_HPP
