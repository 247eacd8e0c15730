#include "planarlab/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

namespace planarlab {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::uint64_t size = 0;
  std::vector<std::uint32_t> modulus;  // monic, length n+1
  std::vector<std::uint32_t> pow_p;    // p^i for i <= n
  // Present when size <= kLogTableLimit.
  std::vector<std::uint32_t> exp_table;  // g^i, i < size-1
  std::vector<std::uint32_t> log_table;  // log_g(a), a != 0
};

}  // namespace detail

namespace {

using detail::FieldData;
using Poly = std::vector<std::uint32_t>;  // over F_p, low-degree-first

constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = mod_inv(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly decode(const FieldData& f, std::uint32_t code) {
  Poly digits(f.n, 0);
  for (unsigned i = 0; i < f.n; ++i) {
    digits[i] = code % f.p;
    code /= f.p;
  }
  return digits;
}

std::uint32_t encode(const FieldData& f, const Poly& digits) {
  std::uint64_t code = 0;
  for (std::size_t i = std::min<std::size_t>(digits.size(), f.n); i-- > 0;) code = code * f.p + digits[i];
  return static_cast<std::uint32_t>(code);
}

std::uint32_t raw_add(const FieldData& f, std::uint32_t a, std::uint32_t b) {
  if (f.p == 2) return a ^ b;
  if (f.n == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % f.p);
  std::uint32_t out = 0;
  for (unsigned i = 0; i < f.n; ++i) {
    const std::uint32_t da = a % f.p, db = b % f.p;
    a /= f.p;
    b /= f.p;
    std::uint32_t s = da + db;
    if (s >= f.p) s -= f.p;
    out += s * f.pow_p[i];
  }
  return out;
}

std::uint32_t raw_neg(const FieldData& f, std::uint32_t a) {
  if (f.p == 2) return a;
  if (f.n == 1) return a == 0 ? 0 : f.p - a;
  std::uint32_t out = 0;
  for (unsigned i = 0; i < f.n; ++i) {
    const std::uint32_t d = a % f.p;
    a /= f.p;
    out += (d == 0 ? 0 : f.p - d) * f.pow_p[i];
  }
  return out;
}

std::uint32_t raw_mul_schoolbook(const FieldData& f, std::uint32_t a, std::uint32_t b) {
  if (f.n == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % f.p);
  const Poly da = decode(f, a), db = decode(f, b);
  std::vector<std::uint64_t> prod(2 * f.n - 1, 0);
  for (unsigned i = 0; i < f.n; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < f.n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % f.p;
  }
  for (std::size_t k = prod.size(); k-- > f.n;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= f.n; ++i) {
      const std::size_t idx = k - f.n + i;
      prod[idx] = (prod[idx] + f.p - c * f.modulus[i] % f.p) % f.p;
    }
  }
  std::uint64_t code = 0;
  for (unsigned i = f.n; i-- > 0;) code = code * f.p + prod[i];
  return static_cast<std::uint32_t>(code);
}

std::uint32_t raw_mul(const FieldData& f, std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) return 0;
  if (!f.exp_table.empty()) {
    const std::uint64_t order = f.size - 1;
    return f.exp_table[(std::uint64_t{f.log_table[a]} + f.log_table[b]) % order];
  }
  return raw_mul_schoolbook(f, a, b);
}

std::uint32_t raw_pow(const FieldData& f, std::uint32_t a, std::uint64_t e) {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = raw_mul(f, result, a);
    a = raw_mul(f, a, a);
    e >>= 1;
  }
  return result;
}

// Extended Euclid on a(x) against the modulus.
std::uint32_t raw_inv(const FieldData& f, std::uint32_t a) {
  if (a == 0) throw std::domain_error("division by zero in " + std::to_string(f.p) + "^" + std::to_string(f.n));
  if (f.n == 1) return mod_inv(a, f.p);
  Poly r0 = f.modulus, r1 = decode(f, a);
  trim(r1);
  Poly s0{}, s1{1};
  while (r1.size() > 1) {
    // r0 = q r1 + r
    Poly r = r0;
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    const std::uint32_t lead_inv = mod_inv(r1.back(), f.p);
    while (r.size() >= r1.size()) {
      const std::uint64_t c = std::uint64_t{r.back()} * lead_inv % f.p;
      const std::size_t shift = r.size() - r1.size();
      q[shift] = static_cast<std::uint32_t>(c);
      for (std::size_t i = 0; i < r1.size(); ++i) {
        r[shift + i] = static_cast<std::uint32_t>((r[shift + i] + f.p - c * r1[i] % f.p) % f.p);
      }
      trim(r);
    }
    trim(q);
    Poly s = poly_sub(s0, poly_mul(q, s1, f.p), f.p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant c with s1 * a = c (mod m).
  const std::uint64_t c_inv = mod_inv(r1[0], f.p);
  for (auto& c : s1) c = static_cast<std::uint32_t>(c * c_inv % f.p);
  s1 = poly_mod(std::move(s1), f.modulus, f.p);
  return encode(f, s1);
}

void build_log_tables(FieldData& f) {
  if (f.size > kLogTableLimit || f.size < 3) return;
  const std::uint64_t order = f.size - 1;
  const auto factors = prime_factors(order);
  auto pow_sb = [&f](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = raw_mul_schoolbook(f, r, a);
      a = raw_mul_schoolbook(f, a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t g = 0;
  for (std::uint32_t cand = 2; cand < f.size; ++cand) {
    bool primitive = true;
    for (auto l : factors) {
      if (pow_sb(cand, order / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) return;
  f.exp_table.resize(order);
  f.log_table.assign(f.size, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    f.exp_table[i] = x;
    f.log_table[x] = static_cast<std::uint32_t>(i);
    x = raw_mul_schoolbook(f, x, g);
  }
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, Poly>, std::unique_ptr<FieldData>> fields;
  std::map<std::pair<std::uint32_t, unsigned>, Poly> canonical;
  std::map<std::pair<const FieldData*, const FieldData*>, std::uint32_t> roots;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::uint64_t checked_size(std::uint32_t p, unsigned n) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= p;
    if (size > kMaxFieldSize) {
      throw GuardExceeded("field " + std::to_string(p) + "^" + std::to_string(n) + " exceeds the size limit 2^24");
    }
  }
  return size;
}

const FieldData* intern(std::uint32_t p, Poly modulus) {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_pair(p, modulus);
  if (auto it = reg.fields.find(key); it != reg.fields.end()) return it->second.get();
  auto data = std::make_unique<FieldData>();
  data->p = p;
  data->n = static_cast<unsigned>(modulus.size() - 1);
  data->size = checked_size(p, data->n);
  data->modulus = std::move(modulus);
  data->pow_p.resize(data->n + 1);
  data->pow_p[0] = 1;
  for (unsigned i = 1; i <= data->n; ++i) data->pow_p[i] = data->pow_p[i - 1] * p;
  build_log_tables(*data);
  const FieldData* raw = data.get();
  reg.fields.emplace(std::move(key), std::move(data));
  return raw;
}

const FieldData& require(const FieldData* d) {
  if (d == nullptr) throw std::logic_error("use of a default-constructed field");
  return *d;
}

void check_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("field elements belong to different fields");
}

std::uint32_t parse_u32(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

// --- irreducibility -------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

bool irreducible_by_trial_division(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly m(poly.begin(), poly.end());
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t n = m.size() - 1;
  if (n == 1) return true;
  // Every monic divisor of degree 1..n/2.
  for (std::size_t k = 1; k <= n / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly d(k + 1, 0);
      std::uint64_t u = t;
      for (std::size_t i = 0; i < k; ++i) {
        d[i] = static_cast<std::uint32_t>(u % p);
        u /= p;
      }
      d[k] = 1;
      if (poly_mod(m, d, p).empty()) return false;
    }
  }
  return true;
}

bool irreducible_by_distinct_degree(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly m(poly.begin(), poly.end());
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t n = m.size() - 1;
  if (n == 1) return true;
  // gcd(x^{p^i} - x, m) = 1 for all i <= n/2.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = poly_powmod(h, p, m, p);
    Poly g = poly_gcd(m, poly_sub(h, Poly{0, 1}, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace detail

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  std::size_t deg = poly.size();
  while (deg > 0 && poly[deg - 1] == 0) --deg;
  if (deg <= 5) return detail::irreducible_by_trial_division(poly, p);
  return detail::irreducible_by_distinct_degree(poly, p);
}

// --- construction ---------------------------------------------------------

Field make_field(std::uint32_t p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
  const std::uint64_t size = checked_size(p, n);
  auto& reg = registry();
  Poly modulus;
  {
    std::lock_guard lock(reg.mu);
    if (auto it = reg.canonical.find({p, n}); it != reg.canonical.end()) modulus = it->second;
  }
  if (modulus.empty()) {
    // c_0 is the most significant position in the scan order.
    for (std::uint64_t t = 0; t < size; ++t) {
      Poly cand(n + 1, 0);
      std::uint64_t u = t;
      for (unsigned i = n; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(u % p);
        u /= p;
      }
      cand[n] = 1;
      if (is_irreducible_mod_p(cand, p)) {
        modulus = std::move(cand);
        break;
      }
    }
    if (modulus.empty()) throw std::logic_error("no irreducible polynomial found");
    std::lock_guard lock(reg.mu);
    reg.canonical.emplace(std::make_pair(p, n), modulus);
  }
  return Field(intern(p, std::move(modulus)));
}

Field make_field_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree at least 1");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible_mod_p(modulus, p)) throw std::invalid_argument("modulus is reducible over F_p");
  checked_size(p, static_cast<unsigned>(modulus.size() - 1));
  return Field(intern(p, std::move(modulus)));
}

Field parse_field(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) throw std::invalid_argument("malformed field '" + std::string(text) + "'");
  const auto slash = text.find('/');
  const std::uint32_t p = parse_u32(text.substr(0, caret), "characteristic");
  const std::uint32_t n =
      parse_u32(text.substr(caret + 1, slash == std::string_view::npos ? std::string_view::npos : slash - caret - 1),
                "extension degree");
  if (slash == std::string_view::npos) return make_field(p, n);
  Poly modulus;
  std::string_view rest = text.substr(slash + 1);
  while (true) {
    const auto comma = rest.find(',');
    modulus.push_back(parse_u32(rest.substr(0, comma), "modulus coefficient"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (modulus.size() != n + 1) throw std::invalid_argument("modulus length does not match the extension degree");
  return make_field_with_modulus(p, std::move(modulus));
}

// --- Field ----------------------------------------------------------------

std::uint32_t Field::characteristic() const { return require(data_).p; }
unsigned Field::degree() const { return require(data_).n; }
std::uint64_t Field::size() const { return require(data_).size; }
const std::vector<std::uint32_t>& Field::modulus() const { return require(data_).modulus; }
bool Field::has_log_tables() const { return !require(data_).exp_table.empty(); }

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement Field::element(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("element index out of range");
  return FieldElement(*this, static_cast<std::uint32_t>(index));
}

FieldElement Field::from_int(std::int64_t value) const {
  const std::int64_t p = characteristic();
  return FieldElement(*this, static_cast<std::uint32_t>(((value % p) + p) % p));
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  const auto& f = require(data_);
  if (coeffs.size() != f.n) throw std::invalid_argument("coefficient vector length must equal the field degree");
  for (auto c : coeffs)
    if (c >= f.p) throw std::invalid_argument("coefficient out of range [0, p)");
  return FieldElement(*this, encode(f, Poly(coeffs.begin(), coeffs.end())));
}

FieldElement Field::generator() const {
  const auto& f = require(data_);
  if (f.n == 1) return FieldElement(*this, static_cast<std::uint32_t>((f.p - f.modulus[0]) % f.p));
  return FieldElement(*this, f.p);
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(size());
  for (std::uint64_t i = 0; i < size(); ++i) out.emplace_back(*this, static_cast<std::uint32_t>(i));
  return out;
}

std::string Field::describe() const {
  const auto& f = require(data_);
  std::ostringstream os;
  os << f.p << '^' << f.n << '/';
  for (std::size_t i = 0; i < f.modulus.size(); ++i) os << (i ? "," : "") << f.modulus[i];
  return os.str();
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const { return raw_add(*data_, a, b); }
std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return raw_add(*data_, a, raw_neg(*data_, b)); }
std::uint32_t Field::neg(std::uint32_t a) const { return raw_neg(*data_, a); }
std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const { return raw_mul(*data_, a, b); }
std::uint32_t Field::mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
  return raw_mul_schoolbook(*data_, a, b);
}
std::uint32_t Field::inv(std::uint32_t a) const { return raw_inv(*data_, a); }
std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const { return raw_pow(*data_, a, e); }

// --- FieldElement ---------------------------------------------------------

std::vector<std::uint32_t> FieldElement::coeffs() const { return decode(require(owner_), code_); }

FieldElement FieldElement::operator-() const { return FieldElement(field(), raw_neg(require(owner_), code_)); }

FieldElement FieldElement::inverse() const { return FieldElement(field(), raw_inv(require(owner_), code_)); }

FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(field(), raw_pow(require(owner_), code_, e)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field(), raw_add(require(a.owner_), a.code_, b.code_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  const auto& f = require(a.owner_);
  return FieldElement(a.field(), raw_add(f, a.code_, raw_neg(f, b.code_)));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field(), raw_mul(require(a.owner_), a.code_, b.code_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  const auto& f = require(a.owner_);
  return FieldElement(a.field(), raw_mul(f, a.code_, raw_inv(f, b.code_)));
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

std::vector<FieldElement> enumerate(const Field& field) { return field.elements(); }

// --- embeddings -----------------------------------------------------------

Embedding::Embedding(Field source, Field target, FieldElement image_of_generator)
    : source_(source), target_(target), image_(image_of_generator) {
  if (!(image_.field() == target_)) throw std::invalid_argument("generator image must live in the target field");
  if (source_.characteristic() != target_.characteristic())
    throw std::invalid_argument("embedding between fields of different characteristic");
  if (target_.degree() % source_.degree() != 0)
    throw std::invalid_argument("target degree is not a multiple of the source degree");
  // The image must be a root of the source modulus.
  const auto& m = source_.modulus();
  std::uint32_t acc = 0;
  for (std::size_t i = m.size(); i-- > 0;) acc = target_.add(target_.mul(acc, image_.code()), m[i]);
  if (acc != 0) throw std::invalid_argument("generator image is not a root of the source modulus");
  basis_images_.resize(source_.degree());
  std::uint32_t power = 1;
  for (unsigned i = 0; i < source_.degree(); ++i) {
    basis_images_[i] = power;
    power = target_.mul(power, image_.code());
  }
}

std::uint32_t Embedding::map_code(std::uint32_t code) const {
  const std::uint32_t p = source_.characteristic();
  std::uint32_t out = 0;
  for (unsigned i = 0; i < basis_images_.size() && code != 0; ++i) {
    const std::uint32_t c = code % p;
    code /= p;
    if (c != 0) out = target_.add(out, target_.mul(c, basis_images_[i]));
  }
  return out;
}

FieldElement Embedding::operator()(const FieldElement& a) const {
  if (!(a.field() == source_)) throw std::invalid_argument("element is not in the embedding's source field");
  return FieldElement(target_, map_code(a.code()));
}

FieldElement embed(const Embedding& e, const FieldElement& a) { return e(a); }

Embedding make_embedding(const Field& source, const Field& target) {
  if (source.characteristic() != target.characteristic())
    throw std::invalid_argument("embedding between fields of different characteristic");
  if (target.degree() % source.degree() != 0)
    throw std::invalid_argument("target degree is not a multiple of the source degree");
  auto& reg = registry();
  const auto key = std::make_pair(source.data(), target.data());
  {
    std::lock_guard lock(reg.mu);
    if (auto it = reg.roots.find(key); it != reg.roots.end()) {
      return Embedding(source, target, FieldElement(target, it->second));
    }
  }
  const auto& m = source.modulus();
  for (std::uint64_t x = 0; x < target.size(); ++x) {
    std::uint32_t acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = target.add(target.mul(acc, static_cast<std::uint32_t>(x)), m[i]);
    if (acc == 0) {
      {
        std::lock_guard lock(reg.mu);
        reg.roots.emplace(key, static_cast<std::uint32_t>(x));
      }
      return Embedding(source, target, FieldElement(target, static_cast<std::uint32_t>(x)));
    }
  }
  throw std::logic_error("source modulus has no root in the target field");
}

Extension make_extension(const Field& base, unsigned r) {
  if (r < 1) throw std::invalid_argument("extension degree r must be at least 1");
  const std::uint64_t total = std::uint64_t{base.degree()} * r;
  if (total > 64) throw GuardExceeded("extension degree too large");
  Field target = r == 1 ? base : make_field(base.characteristic(), static_cast<unsigned>(total));
  return {target, make_embedding(base, target)};
}

}  // namespace planarlab
