// Slow, independent reference computations used as test oracles.

#ifndef PLANARLAB_TESTS_ORACLES_HPP
#define PLANARLAB_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "planarlab/gf.hpp"
#include "planarlab/multipoly.hpp"
#include "planarlab/unipoly.hpp"

namespace oracle {

using Digits = std::vector<std::int64_t>;

inline Digits digits(std::uint64_t code, std::uint32_t p, unsigned n) {
  Digits d(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    d[i] = static_cast<std::int64_t>(code % p);
    code /= p;
  }
  return d;
}

inline std::uint64_t undigits(const Digits& d, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + static_cast<std::uint64_t>(((d[i] % p) + p) % p);
  return code;
}

// Product of two element codes in F_p[x]/(modulus), by integer convolution and long division.
inline std::uint64_t mul(std::uint32_t p, const std::vector<std::uint32_t>& modulus, std::uint64_t a, std::uint64_t b) {
  const unsigned n = static_cast<unsigned>(modulus.size()) - 1;
  const Digits da = digits(a, p, n), db = digits(b, p, n);
  Digits prod(2 * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) prod[i + j] += da[i] * db[j];
  for (unsigned k = 2 * n - 1; k >= n && k > 0; --k) {
    const std::int64_t c = prod[k] % p;
    if (c == 0) continue;
    for (unsigned i = 0; i <= n; ++i) prod[k - n + i] -= c * modulus[i];
  }
  prod.resize(n);
  return undigits(prod, p);
}

// True iff no monic polynomial of degree 1..deg/2 divides poly (low-degree-first, monic).
inline bool irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const unsigned n = static_cast<unsigned>(poly.size()) - 1;
  for (unsigned m = 1; m <= n / 2; ++m) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Digits div = digits(c, p, m);
      div.push_back(1);
      Digits rem(poly.begin(), poly.end());
      for (unsigned k = n; k >= m; --k) {
        const std::int64_t lead = ((rem[k] % p) + p) % p;
        if (lead != 0)
          for (unsigned i = 0; i <= m; ++i) rem[k - m + i] -= lead * div[i];
        if (k == m) break;
      }
      bool zero = true;
      for (unsigned i = 0; i < m; ++i) zero = zero && ((rem[i] % p) + p) % p == 0;
      if (zero) return false;
    }
  }
  return true;
}

inline planarlab::FieldElement eval(const planarlab::UniPoly& f, const planarlab::FieldElement& x,
                                    const planarlab::Embedding& e) {
  // Sum of monomials, no Horner.
  planarlab::FieldElement acc = x.field().zero();
  for (unsigned i : f.support()) acc += e(f.coeff(i)) * x.pow(i);
  return acc;
}

// Definitional planarity by explicit image sets.
inline bool planar(const planarlab::UniPoly& f, unsigned r) {
  const auto ext = planarlab::make_extension(f.field(), r);
  const auto elems = ext.field.elements();
  const bool even = f.field().characteristic() == 2;
  for (const auto& eps : elems) {
    if (eps.is_zero()) continue;
    std::set<std::uint32_t> image;
    for (const auto& x : elems) {
      auto v = even ? eval(f, x + eps, ext.embedding) + eval(f, x, ext.embedding) + eps * x
                    : eval(f, x + eps, ext.embedding) - eval(f, x, ext.embedding);
      image.insert(v.code());
    }
    if (image.size() != elems.size()) return false;
  }
  return true;
}

inline bool apn(const planarlab::UniPoly& f, unsigned r) {
  const auto ext = planarlab::make_extension(f.field(), r);
  const auto elems = ext.field.elements();
  for (const auto& eps : elems) {
    if (eps.is_zero()) continue;
    std::vector<unsigned> mult(elems.size(), 0);
    for (const auto& x : elems) ++mult[(eval(f, x + eps, ext.embedding) + eval(f, x, ext.embedding)).code()];
    for (auto m : mult)
      if (m != 0 && m != 2) return false;
  }
  return true;
}

// f(x) - f(y) - f(z) + f(-x+y+z), or the characteristic-two sum.
inline planarlab::FieldElement numerator(const planarlab::UniPoly& f, const planarlab::FieldElement& x,
                                         const planarlab::FieldElement& y, const planarlab::FieldElement& z,
                                         const planarlab::Embedding& e) {
  if (f.field().characteristic() == 2) return eval(f, x, e) + eval(f, y, e) + eval(f, z, e) + eval(f, x + y + z, e);
  return eval(f, x, e) - eval(f, y, e) - eval(f, z, e) + eval(f, -x + y + z, e);
}

inline planarlab::UniPoly random_unipoly(const planarlab::Field& field, unsigned degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> c(0, field.size() - 1), nz(1, field.size() - 1);
  std::vector<planarlab::FieldElement> coeffs(degree + 1);
  for (auto& x : coeffs) x = field.element(c(rng));
  coeffs.back() = field.element(nz(rng));
  return planarlab::UniPoly(field, coeffs);
}

inline planarlab::MultiPoly random_multipoly(const planarlab::Field& field, unsigned terms, unsigned max_exp,
                                             std::mt19937_64& rng, bool with_t = true) {
  std::uniform_int_distribution<std::uint64_t> c(1, field.size() - 1);
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  planarlab::MultiPoly out(field);
  for (unsigned i = 0; i < terms; ++i) {
    planarlab::Exponents ex{static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng)),
                            static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(with_t ? e(rng) : 0)};
    out += planarlab::MultiPoly::term(field, ex, field.element(c(rng)));
  }
  return out;
}

}  // namespace oracle

#endif  // PLANARLAB_TESTS_ORACLES_HPP
