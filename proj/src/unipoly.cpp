#include "planarlab/unipoly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace planarlab {

namespace {

void check_same(const UniPoly& a, const UniPoly& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("polynomials over different fields");
}

template <typename T>
T parse_number(std::string_view s, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

UniPoly::UniPoly(Field field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw std::invalid_argument("coefficient from a different field");
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(Field field, unsigned exponent, FieldElement coeff) {
  std::vector<FieldElement> c(exponent + 1, field.zero());
  c[exponent] = coeff;
  return UniPoly(field, std::move(c));
}

UniPoly UniPoly::from_terms(Field field, const std::vector<std::pair<unsigned, std::uint32_t>>& terms) {
  UniPoly out(field);
  for (const auto& [e, c] : terms) out = out + monomial(field, e, field.element(c));
  return out;
}

std::vector<unsigned> UniPoly::support() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.push_back(i);
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scale(leading().inverse());
}

UniPoly UniPoly::scale(const FieldElement& c) const {
  std::vector<FieldElement> out(coeffs_);
  for (auto& x : out) x = x * c;
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(field_);
  std::vector<FieldElement> out(coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = field_.from_int(static_cast<std::int64_t>(i)) * coeffs_[i];
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  check_same(*this, g);
  UniPoly result(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) result = result * g + constant(field_, coeffs_[i]);
  return result;
}

UniPoly UniPoly::embedded(const Embedding& e) const {
  if (!(e.source() == field_)) throw std::invalid_argument("embedding source does not match the polynomial's field");
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(e(c));
  return UniPoly(e.target(), std::move(out));
}

FieldElement UniPoly::operator()(const FieldElement& x) const {
  if (!(x.field() == field_)) throw std::invalid_argument("evaluation point from a different field");
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x.code()), coeffs_[i].code());
  return FieldElement(field_, acc);
}

FieldElement UniPoly::evaluate(const FieldElement& x, const Embedding& e) const {
  if (!(e.source() == field_)) throw std::invalid_argument("embedding source does not match the polynomial's field");
  if (!(x.field() == e.target())) throw std::invalid_argument("evaluation point is not in the embedding target");
  const Field& t = e.target();
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = t.add(t.mul(acc, x.code()), e.map_code(coeffs_[i].code()));
  return FieldElement(t, acc);
}

std::vector<std::uint32_t> UniPoly::value_table() const {
  const std::uint64_t q = field_.size();
  std::vector<std::uint32_t> codes;
  codes.reserve(coeffs_.size());
  for (const auto& c : coeffs_) codes.push_back(c.code());
  std::vector<std::uint32_t> out(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint32_t acc = 0;
    for (std::size_t i = codes.size(); i-- > 0;) acc = field_.add(field_.mul(acc, static_cast<std::uint32_t>(x)), codes[i]);
    out[x] = acc;
  }
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  check_same(a, b);
  std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
  return UniPoly(a.field_, std::move(out));
}

UniPoly UniPoly::operator-() const {
  std::vector<FieldElement> out(coeffs_);
  for (auto& c : out) c = -c;
  return UniPoly(field_, std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  const Field& f = a.field_;
  std::vector<std::uint32_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const std::uint32_t ai = a.coeffs_[i].code();
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] = f.add(acc[i + j], f.mul(ai, b.coeffs_[j].code()));
  }
  std::vector<FieldElement> out;
  out.reserve(acc.size());
  for (auto c : acc) out.emplace_back(f, c);
  return UniPoly(f, std::move(out));
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0:0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    os << (first ? "" : ",") << i << ':' << coeffs_[i].code();
    first = false;
  }
  return os.str();
}

FieldElement evaluate(const UniPoly& f, const FieldElement& x) { return f(x); }
FieldElement evaluate(const UniPoly& f, const FieldElement& x, const Embedding& e) { return f.evaluate(x, e); }
UniPoly derivative(const UniPoly& f) { return f.derivative(); }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  UniPoly rem = a;
  std::vector<FieldElement> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, f.zero());
  const FieldElement lead_inv = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const unsigned shift = static_cast<unsigned>(rem.degree() - b.degree());
    const FieldElement c = rem.leading() * lead_inv;
    quot[shift] = c;
    rem = rem - UniPoly::monomial(f, shift, c) * b;
  }
  return {UniPoly(f, std::move(quot)), rem};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  check_same(a, b);
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly parse_unipoly(const Field& field, std::string_view text) {
  UniPoly out(field);
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view term = rest.substr(0, comma);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("malformed term '" + std::string(term) + "'");
    const auto e = parse_number<unsigned>(term.substr(0, colon), "exponent");
    const auto c = parse_number<std::uint64_t>(term.substr(colon + 1), "coefficient");
    if (c >= field.size()) throw std::invalid_argument("coefficient " + std::to_string(c) + " is not a field element index");
    if (e > 1u << 20) throw std::invalid_argument("exponent too large");
    out = out + UniPoly::monomial(field, e, field.element(c));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

bool is_power_of(std::uint64_t value, std::uint64_t base) {
  if (value == 0 || base < 2) return false;
  while (value % base == 0) value /= base;
  return value == 1;
}

bool is_p_power_polynomial(const UniPoly& f) {
  const std::uint32_t p = f.field().characteristic();
  for (unsigned e : f.support())
    if (e != 0 && !is_power_of(e, p)) return false;
  return true;
}

bool induces_permutation(const UniPoly& f) {
  const auto table = f.value_table();
  std::vector<bool> seen(table.size(), false);
  for (auto v : table) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

EATransform EATransform::identity(const Field& field) {
  return {UniPoly::monomial(field, 1), UniPoly::monomial(field, 1), UniPoly(field)};
}

std::optional<std::string> EATransform::violation() const {
  const Field& f = a1.field();
  if (!(a2.field() == f) || !(a3.field() == f)) return "A1, A2, A3 must share one field";
  if (!is_p_power_polynomial(a1)) return "A1 has a nonconstant term whose degree is not a power of p";
  if (!is_p_power_polynomial(a2)) return "A2 has a nonconstant term whose degree is not a power of p";
  if (!is_p_power_polynomial(a3)) return "A3 has a nonconstant term whose degree is not a power of p";
  if (!induces_permutation(a1)) return "A1 does not permute the base field";
  if (!induces_permutation(a2)) return "A2 does not permute the base field";
  return std::nullopt;
}

UniPoly ea_apply(const EATransform& t, const UniPoly& f) {
  if (auto why = t.violation()) throw std::invalid_argument("invalid EA transform: " + *why);
  if (!(f.field() == t.a1.field())) throw std::invalid_argument("transform and polynomial over different fields");
  return t.a1.compose(f.compose(t.a2)) + t.a3;
}

DegreeClass degree_class(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("degree class of the zero polynomial");
  const std::uint32_t p = f.field().characteristic();
  DegreeClass out;
  out.degree = f.degree();
  const auto d = static_cast<std::uint64_t>(out.degree);
  out.residue = static_cast<std::uint32_t>(d % p);

  if (p == 2) {
    out.filter = DegreeFilter::even_degree;
    const bool ok = d == 1 || d == 2 || d % 4 == 0;
    out.verdict = ok ? FilterVerdict::consistent : FilterVerdict::excluded;
    out.note = ok ? "degree is 1, 2 or divisible by 4" : "degree is not 1 or 2 and not divisible by 4";
    if (f.support().size() == 1) {
      out.monomial_verdict = is_power_of(d, 2) ? FilterVerdict::consistent : FilterVerdict::excluded;
    }
    return out;
  }

  if (out.residue == 0) {
    out.filter = DegreeFilter::residue_zero;
    out.verdict = FilterVerdict::not_applicable;
    out.note = "degree divisible by p; no degree filter applies";
    return out;
  }

  if (out.residue != 1) {
    out.filter = DegreeFilter::residue_other;
    bool shape = d == 2;
    if (p == 3) {
      // (3^k + 1)/2 for odd k
      std::uint64_t pk = 3;
      for (unsigned k = 1; (pk + 1) / 2 <= d; k += 2, pk *= 9) {
        if ((pk + 1) / 2 == d) shape = true;
      }
    }
    out.verdict = shape ? FilterVerdict::consistent : FilterVerdict::excluded;
    out.note = shape ? "degree matches X^2 or X^((3^k+1)/2) with k odd"
                     : "degree is not 0 or 1 mod p and matches neither X^2 nor X^((3^k+1)/2)";
    return out;
  }

  out.filter = DegreeFilter::residue_one;
  std::uint64_t pk = p;
  unsigned k = 1;
  while (pk + 1 < d) {
    pk *= p;
    ++k;
  }
  if (pk + 1 != d) {
    out.verdict = FilterVerdict::excluded;
    out.note = "degree is 1 mod p but not of the form p^k+1";
    return out;
  }
  out.pk_exponent = k;
  const UniPoly h = f.monic() - UniPoly::monomial(f.field(), out.degree);
  out.tail_degree = h.degree();
  const int e = h.degree();
  const bool ok = e <= 0 || e % static_cast<int>(p) == 0 || (e - 1) % static_cast<int>(p) == 0;
  out.verdict = ok ? FilterVerdict::consistent : FilterVerdict::excluded;
  out.note = ok ? "X^(p^k+1) + h with p | e or p | e-1" : "X^(p^k+1) + h but neither p | e nor p | e-1";
  return out;
}

std::string to_string(DegreeFilter f) {
  switch (f) {
    case DegreeFilter::residue_other:
      return "residue-other";
    case DegreeFilter::residue_one:
      return "residue-one";
    case DegreeFilter::residue_zero:
      return "residue-zero";
    case DegreeFilter::even_degree:
      return "even-degree";
  }
  return "unknown";
}

std::string to_string(FilterVerdict v) {
  switch (v) {
    case FilterVerdict::consistent:
      return "consistent";
    case FilterVerdict::excluded:
      return "excluded";
    case FilterVerdict::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

}  // namespace planarlab
