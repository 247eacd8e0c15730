// Finite fields F_{p^n} in polynomial basis, with embeddings into extensions.
//
// Elements are stored as their enumeration index: the coefficient vector
// (c_0, ..., c_{n-1}) of c_0 + c_1 x + ... read as the base-p integer
// sum c_i p^i. Fields are interned, so a Field is a cheap handle and two
// handles compare equal iff they describe the same (p, modulus).

#ifndef PLANARLAB_GF_HPP
#define PLANARLAB_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planarlab {

/// Thrown when an enumeration or search would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest field (p^n) that make_field accepts.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;

namespace detail {
struct FieldData;
}

class FieldElement;

class Field {
 public:
  Field() = default;

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint64_t size() const;
  /// Monic modulus, low-degree-first, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const;
  bool valid() const { return data_ != nullptr; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Element with the given enumeration index.
  FieldElement element(std::uint64_t index) const;
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// The class of x, i.e. the generator of the polynomial basis.
  FieldElement generator() const;
  /// All elements, in enumeration order.
  std::vector<FieldElement> elements() const;

  /// "p^n/m_0,m_1,...,m_n".
  std::string describe() const;

  // Arithmetic on raw element indices, for hot loops. No owner checks.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Schoolbook product reduced by the modulus; mul() may use log tables instead.
  std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const;
  /// Inverse via extended Euclid; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  bool has_log_tables() const;

  const detail::FieldData* data() const { return data_; }

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_ = nullptr;

  friend class FieldElement;
  friend Field make_field(std::uint32_t, unsigned);
  friend Field make_field_with_modulus(std::uint32_t, std::vector<std::uint32_t>);
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, std::uint32_t code) : owner_(field.data_), code_(code) {}

  Field field() const { return Field(owner_); }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }
  std::vector<std::uint32_t> coeffs() const;
  /// Enumeration index as decimal text.
  std::string to_string() const { return std::to_string(code_); }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.owner_ == b.owner_ && a.code_ == b.code_;
  }
  /// Enumeration order; only meaningful within one field.
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.code_ < b.code_; }

 private:
  const detail::FieldData* owner_ = nullptr;
  std::uint32_t code_ = 0;
};

enum class ArithOp { add, sub, mul, div };

/// Canonical F_{p^n}: the modulus is the lexicographically smallest monic
/// irreducible, comparing coefficients low-degree-first. For n = 1 the modulus is X.
Field make_field(std::uint32_t p, unsigned n);

/// F_p[x]/(modulus) for an explicitly chosen monic irreducible modulus.
Field make_field_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

/// Parses "p^n" (canonical modulus) or "p^n/m_0,...,m_n".
Field parse_field(std::string_view text);

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// All elements in enumeration order.
std::vector<FieldElement> enumerate(const Field& field);

bool is_prime(std::uint64_t n);

namespace detail {
// The two irreducibility routes behind is_irreducible_mod_p.
bool irreducible_by_trial_division(std::span<const std::uint32_t> poly, std::uint32_t p);
bool irreducible_by_distinct_degree(std::span<const std::uint32_t> poly, std::uint32_t p);
}  // namespace detail

/// Irreducibility over F_p of a monic polynomial (coefficients low-degree-first).
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Ring embedding F_{p^n} -> F_{p^{nr}} fixed by the image of the generator.
class Embedding {
 public:
  Embedding() = default;
  Embedding(Field source, Field target, FieldElement image_of_generator);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  const FieldElement& image_of_generator() const { return image_; }

  FieldElement operator()(const FieldElement& a) const;
  std::uint32_t map_code(std::uint32_t code) const;

 private:
  Field source_;
  Field target_;
  FieldElement image_;
  std::vector<std::uint32_t> basis_images_;  // codes of image^i, i < source degree
};

/// Deterministic embedding: the generator goes to the root of the source
/// modulus with the smallest enumeration index in the target.
Embedding make_embedding(const Field& source, const Field& target);

FieldElement embed(const Embedding& e, const FieldElement& a);

/// Convenience: F_{q^r} for q = |base| with the canonical modulus, plus the embedding.
struct Extension {
  Field field;
  Embedding embedding;
};
Extension make_extension(const Field& base, unsigned r);

}  // namespace planarlab

#endif  // PLANARLAB_GF_HPP
