#include "planarlab/multipoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace planarlab {

namespace {

std::uint64_t pack(const Exponents& e) {
  return std::uint64_t{e[0]} << 48 | std::uint64_t{e[1]} << 32 | std::uint64_t{e[2]} << 16 | e[3];
}

Exponents unpack(std::uint64_t k) {
  return {static_cast<std::uint16_t>(k >> 48), static_cast<std::uint16_t>(k >> 32), static_cast<std::uint16_t>(k >> 16),
          static_cast<std::uint16_t>(k)};
}

unsigned idx(Var v) { return static_cast<unsigned>(v); }

unsigned total(const Exponents& e) { return unsigned{e[0]} + e[1] + e[2] + e[3]; }

void check_same(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("multivariate polynomials over different fields");
}

MultiPoly from_accumulator(const Field& field, const std::unordered_map<std::uint64_t, std::uint32_t>& acc) {
  MultiPoly out(field);
  for (const auto& [k, c] : acc)
    if (c != 0) out += MultiPoly::term(field, unpack(k), FieldElement(field, c));
  return out;
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

std::string var_name(Var v) {
  static const char* names[] = {"X", "Y", "Z", "T"};
  return names[idx(v)];
}

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

// --- construction and queries ---------------------------------------------

MultiPoly MultiPoly::variable(Field field, Var v) {
  Exponents e{};
  e[idx(v)] = 1;
  return term(field, e, field.one());
}

MultiPoly MultiPoly::constant(Field field, FieldElement c) { return term(field, Exponents{}, c); }

MultiPoly MultiPoly::term(Field field, Exponents e, FieldElement c) {
  if (!(c.field() == field)) throw std::invalid_argument("coefficient from a different field");
  MultiPoly out(field);
  if (!c.is_zero()) out.terms_.emplace(e, c);
  return out;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& u, Var v) {
  MultiPoly out(u.field());
  for (unsigned i : u.support()) {
    Exponents e{};
    e[idx(v)] = static_cast<std::uint16_t>(i);
    out.terms_.emplace(e, u.coeff(i));
  }
  return out;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0); }

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(total(terms_.begin()->first)); }

int MultiPoly::degree_in(Var v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx(v)]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total(t.first) == d; });
}

FieldElement MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

const std::pair<const Exponents, FieldElement>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Exponents& e, std::uint32_t code) {
  if (code == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, FieldElement(field_, code));
    return;
  }
  const std::uint32_t sum = field_.add(it->second.code(), code);
  if (sum == 0) {
    terms_.erase(it);
  } else {
    it->second = FieldElement(field_, sum);
  }
}

MultiPoly MultiPoly::scale(const FieldElement& c) const {
  if (!(c.field() == field_)) throw std::invalid_argument("scalar from a different field");
  MultiPoly out(field_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, field_.one());
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  return scale(leading_term().second.inverse());
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(0, degree_in(v))) + 1, MultiPoly(field_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx(v)] = 0;
    out[e[idx(v)]].terms_.emplace(rest, c);
  }
  return out;
}

UniPoly MultiPoly::to_unipoly(Var v) const {
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(std::max(0, degree_in(v))) + 1, field_.zero());
  for (const auto& [e, c] : terms_) {
    for (Var w : kAllVars)
      if (w != v && e[idx(w)] != 0) throw std::invalid_argument("polynomial involves " + var_name(w));
    coeffs[e[idx(v)]] = c;
  }
  return UniPoly(field_, std::move(coeffs));
}

FieldElement MultiPoly::evaluate(const std::array<FieldElement, 4>& point) const {
  for (const auto& x : point)
    if (!(x.field() == field_)) throw std::invalid_argument("evaluation point from a different field");
  std::uint32_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t t = c.code();
    for (unsigned i = 0; i < 4 && t != 0; ++i)
      if (e[i] != 0) t = field_.mul(t, field_.pow(point[i].code(), e[i]));
    acc = field_.add(acc, t);
  }
  return FieldElement(field_, acc);
}

FieldElement MultiPoly::evaluate(const std::array<FieldElement, 4>& point, const Embedding& emb) const {
  return embedded(emb).evaluate(point);
}

MultiPoly MultiPoly::embedded(const Embedding& emb) const {
  if (!(emb.source() == field_)) throw std::invalid_argument("embedding source does not match the polynomial's field");
  MultiPoly out(emb.target());
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, emb(c));
  return out;
}

// --- ring operations ------------------------------------------------------

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  if (!field_.valid()) field_ = b.field_;
  check_same(*this, b);
  for (const auto& [e, c] : b.terms_) add_term(e, c.code());
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  out += b;
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  const Field& f = a.field_;
  std::unordered_map<std::uint64_t, std::uint32_t> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (unsigned i = 0; i < 4; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      auto& slot = acc[pack(e)];
      slot = f.add(slot, f.mul(ca.code(), cb.code()));
    }
  }
  return from_accumulator(f, acc);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0.0.0.0:0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : "+") << e[0] << '.' << e[1] << '.' << e[2] << '.' << e[3] << ':' << c.code();
    first = false;
  }
  return os.str();
}

MultiPoly parse_multipoly(const Field& field, std::string_view text) {
  MultiPoly out(field);
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto plus = rest.find('+');
    const std::string_view term = rest.substr(0, plus);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("malformed term '" + std::string(term) + "'");
    Exponents e{};
    std::string_view exps = term.substr(0, colon);
    for (unsigned i = 0; i < 4; ++i) {
      const auto dot = exps.find('.');
      if ((i < 3) == (dot == std::string_view::npos)) {
        throw std::invalid_argument("expected four exponents in '" + std::string(term) + "'");
      }
      e[i] = parse_number<std::uint16_t>(exps.substr(0, dot), "exponent");
      if (dot != std::string_view::npos) exps = exps.substr(dot + 1);
    }
    const auto c = parse_number<std::uint64_t>(term.substr(colon + 1), "coefficient");
    if (c >= field.size()) throw std::invalid_argument("coefficient " + std::to_string(c) + " is not a field element index");
    out += MultiPoly::term(field, e, field.element(c));
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return out;
}

// --- substitution and derivatives -----------------------------------------

MultiPoly substitute(const MultiPoly& f, const Substitution& bindings) {
  const Field& field = f.field();
  for (const auto& [v, g] : bindings) check_same(f, g);
  std::array<std::vector<MultiPoly>, 4> powers;
  auto power = [&](Var v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[idx(v)];
    if (cache.empty()) {
      auto it = bindings.find(v);
      cache.push_back(MultiPoly::constant(field, field.one()));
      cache.push_back(it != bindings.end() ? it->second : MultiPoly::variable(field, v));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  MultiPoly out(field);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(field, c);
    for (Var v : kAllVars)
      if (e[idx(v)] != 0) t = t * power(v, e[idx(v)]);
    out += t;
  }
  return out;
}

MultiPoly partial_derivative(const MultiPoly& f, Var v) {
  const Field& field = f.field();
  MultiPoly out(field);
  for (const auto& [e, c] : f.terms()) {
    const unsigned k = e[idx(v)];
    if (k == 0) continue;
    const FieldElement coeff = c * field.from_int(k);
    if (coeff.is_zero()) continue;
    Exponents d = e;
    --d[idx(v)];
    out += MultiPoly::term(field, d, coeff);
  }
  return out;
}

// --- division -------------------------------------------------------------

DivisionResult divide(const MultiPoly& num, const MultiPoly& den) {
  check_same(num, den);
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Field& field = num.field();
  const auto& [lead_e, lead_c] = den.leading_term();
  const FieldElement lead_inv = lead_c.inverse();
  DivisionResult out{MultiPoly(field), MultiPoly(field)};
  MultiPoly p = num;
  while (!p.is_zero()) {
    const auto& [e, c] = p.leading_term();
    bool divisible = true;
    Exponents shift{};
    for (unsigned i = 0; i < 4; ++i) {
      if (e[i] < lead_e[i]) {
        divisible = false;
        break;
      }
      shift[i] = static_cast<std::uint16_t>(e[i] - lead_e[i]);
    }
    if (divisible) {
      const MultiPoly t = MultiPoly::term(field, shift, c * lead_inv);
      out.quotient += t;
      p = p - t * den;
    } else {
      const MultiPoly t = MultiPoly::term(field, e, c);
      out.remainder += t;
      p = p - t;
    }
  }
  return out;
}

DivisionResult divide_by_linear(const MultiPoly& num, const MultiPoly& linear) {
  check_same(num, linear);
  if (linear.total_degree() != 1) throw std::invalid_argument("divisor is not of total degree 1");
  const Field& field = num.field();
  // Leading variable: the first of X, Y, Z, T with a nonzero linear coefficient.
  Var lead = Var::X;
  FieldElement c = field.zero();
  for (Var v : kAllVars) {
    Exponents e{};
    e[idx(v)] = 1;
    c = linear.coefficient(e);
    if (!c.is_zero()) {
      lead = v;
      break;
    }
  }
  const FieldElement c_inv = c.inverse();
  // linear = c (v - lambda)
  const MultiPoly lambda = -(linear - MultiPoly::variable(field, lead).scale(c)).scale(c_inv);

  DivisionResult out{MultiPoly(field), MultiPoly(field)};
  if (num.is_zero()) return out;
  const auto a = num.coefficients_in(lead);
  const std::size_t m = a.size() - 1;
  if (m == 0) {
    out.remainder = num;
    return out;
  }
  std::vector<MultiPoly> b(m, MultiPoly(field));
  b[m - 1] = a[m];
  for (std::size_t i = m - 1; i >= 1; --i) b[i - 1] = a[i] + lambda * b[i];
  out.remainder = a[0] + lambda * b[0];
  const MultiPoly v = MultiPoly::variable(field, lead);
  MultiPoly q(field);
  for (std::size_t i = m; i-- > 0;) q = q * v + b[i];
  out.quotient = q.scale(c_inv);
  return out;
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  check_same(num, den);
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  DivisionResult r = den.total_degree() == 1 ? divide_by_linear(num, den) : divide(num, den);
  if (!r.remainder.is_zero()) throw std::domain_error("inexact division: nonzero remainder " + r.remainder.to_string());
  if (!(r.quotient * den == num)) throw std::logic_error("division check failed: den * quotient != num");
  return r.quotient;
}

std::optional<unsigned> divides_with_multiplicity(const MultiPoly& f, const MultiPoly& linear) {
  check_same(f, linear);
  if (linear.total_degree() != 1) throw std::invalid_argument("divisor is not of total degree 1");
  if (f.is_zero()) return std::nullopt;
  unsigned m = 0;
  MultiPoly cur = f;
  while (true) {
    DivisionResult r = divide_by_linear(cur, linear);
    if (!r.remainder.is_zero()) return m;
    cur = std::move(r.quotient);
    ++m;
  }
}

// --- gcd ------------------------------------------------------------------

namespace {

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b, std::span<const Var> vars);

MultiPoly leading_coeff_in(const MultiPoly& f, Var v) { return f.coefficients_in(v).back(); }

MultiPoly content_in(const MultiPoly& f, Var v, std::span<const Var> rest) {
  MultiPoly g(f.field());
  for (const auto& c : f.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c, rest);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in v, up to a factor that is a power of lc_v(b).
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
  const int db = b.degree_in(v);
  const MultiPoly lb = leading_coeff_in(b, v);
  MultiPoly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int s = r.degree_in(v) - db;
    Exponents e{};
    e[static_cast<unsigned>(v)] = static_cast<std::uint16_t>(s);
    const MultiPoly shifted = MultiPoly::term(r.field(), e, r.field().one()) * b;
    r = lb * r - leading_coeff_in(r, v) * shifted;
  }
  return r;
}

MultiPoly primitive_part(const MultiPoly& f, Var v, std::span<const Var> rest) {
  if (f.is_zero()) return f;
  return exact_divide(f, content_in(f, v, rest)).normalized();
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b, std::span<const Var> vars) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const Field& field = a.field();
  while (!vars.empty() && !a.involves(vars.front()) && !b.involves(vars.front())) vars = vars.subspan(1);
  if (vars.empty()) return MultiPoly::constant(field, field.one());
  const Var v = vars.front();
  const auto rest = vars.subspan(1);

  const MultiPoly ca = content_in(a, v, rest), cb = content_in(b, v, rest);
  const MultiPoly c = gcd_rec(ca, cb, rest);
  MultiPoly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  if (pb.degree_in(v) == 0) return c.normalized();
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c.normalized();
    pa = std::move(pb);
    pb = primitive_part(r, v, rest);
  }
  return (c * primitive_part(pb, v, rest)).normalized();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b, std::span<const Var> order) {
  check_same(a, b);
  std::vector<Var> vars(order.begin(), order.end());
  for (Var v : kAllVars)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return gcd_rec(a, b, vars);
}

MultiPoly restriction_gcd(const MultiPoly& f, const MultiPoly& g, const Substitution& assignments) {
  check_same(f, g);
  const Field& field = f.field();
  const MultiPoly fr = substitute(f, assignments), gr = substitute(g, assignments);
  std::vector<Var> survivors;
  for (Var v : kAllVars)
    if (fr.involves(v) || gr.involves(v)) survivors.push_back(v);
  if (survivors.size() > 2) throw std::invalid_argument("restrictions involve more than two variables");
  if (fr.is_zero() && gr.is_zero()) return MultiPoly(field);
  if (survivors.empty()) return MultiPoly::constant(field, field.one());
  if (survivors.size() == 1) {
    const Var v = survivors[0];
    return MultiPoly::from_unipoly(gcd(fr.to_unipoly(v), gr.to_unipoly(v)), v);
  }
  if (!fr.is_homogeneous() || !gr.is_homogeneous()) {
    throw std::invalid_argument("bivariate restrictions must be homogeneous");
  }
  const Var main = survivors[0], last = survivors[1];
  const Substitution dehom{{last, MultiPoly::constant(field, field.one())}};
  // Power of `last` dividing a homogeneous h: total degree minus degree after dehomogenizing.
  auto last_power = [&](const MultiPoly& h, const UniPoly& u) { return h.total_degree() - u.degree(); };
  const UniPoly uf = substitute(fr, dehom).to_unipoly(main);
  const UniPoly ug = substitute(gr, dehom).to_unipoly(main);
  const UniPoly ugcd = gcd(uf, ug);
  int power = 0;
  if (fr.is_zero()) {
    power = last_power(gr, ug);
  } else if (gr.is_zero()) {
    power = last_power(fr, uf);
  } else {
    power = std::min(last_power(fr, uf), last_power(gr, ug));
  }
  MultiPoly out(field);
  const int d = ugcd.degree();
  for (unsigned i : ugcd.support()) {
    Exponents e{};
    e[static_cast<unsigned>(main)] = static_cast<std::uint16_t>(i);
    e[static_cast<unsigned>(last)] = static_cast<std::uint16_t>(d - static_cast<int>(i) + power);
    out += MultiPoly::term(field, e, ugcd.coeff(i));
  }
  return out;
}

SquareFreeCertificate is_square_free_trivariate(const MultiPoly& f) {
  SquareFreeCertificate cert;
  static constexpr std::array<Var, 3> y_first{Var::Y, Var::X, Var::Z};
  static constexpr std::array<Var, 3> z_first{Var::Z, Var::X, Var::Y};
  cert.gcd_with_dy = gcd(f, partial_derivative(f, Var::Y), y_first);
  cert.dy_condition = !cert.gcd_with_dy.involves(Var::Y);
  cert.gcd_with_dz = gcd(f, partial_derivative(f, Var::Z), z_first);
  cert.dz_condition = !cert.gcd_with_dz.involves(Var::Z);
  const Field& field = f.field();
  cert.x_condition = !substitute(f, {{Var::X, MultiPoly(field)}}).is_zero();
  return cert;
}

}  // namespace planarlab
