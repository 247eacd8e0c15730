#include "planarlab/planarity.hpp"

#include <atomic>
#include <limits>
#include <vector>

#include "planarlab/parallel.hpp"

namespace planarlab {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Collision {
  std::uint32_t a = kNone, b = kNone;
  bool found() const { return a != kNone; }
};

// Lexicographically first colliding pair in values[0..q).
Collision first_collision(std::span<const std::uint32_t> values, std::vector<std::uint32_t>& first,
                          std::vector<std::uint32_t>& second) {
  std::fill(first.begin(), first.end(), kNone);
  std::fill(second.begin(), second.end(), kNone);
  Collision best;
  for (std::uint32_t x = 0; x < values.size(); ++x) {
    const std::uint32_t v = values[x];
    if (first[v] == kNone) {
      first[v] = x;
    } else if (second[v] == kNone) {
      second[v] = x;
      if (!best.found() || first[v] < best.a) best = {first[v], x};
    }
  }
  return best;
}

Extension checked_extension(const UniPoly& f, unsigned r, std::uint64_t guard) {
  if (r < 1) throw std::invalid_argument("extension degree r must be at least 1");
  const std::uint64_t q = f.field().size();
  std::uint64_t size = 1;
  for (unsigned i = 0; i < r; ++i) {
    size *= q;
    if (size > guard) {
      throw GuardExceeded("q^r = " + std::to_string(q) + "^" + std::to_string(r) + " exceeds the guard " +
                          std::to_string(guard));
    }
  }
  return make_extension(f.field(), r);
}

// Scans nonzero epsilon in parallel; map(eps, out) fills the difference map.
// Returns the smallest failing epsilon with its collision.
template <typename MapFn>
detail::TableVerdict scan_epsilons(const Field& field, unsigned threads, MapFn&& map) {
  const std::uint64_t q = field.size();
  std::atomic<std::uint64_t> best_eps{q};
  const unsigned workers = std::max(1u, threads);
  std::vector<detail::TableVerdict> local(workers);
  parallel_ranges(q - 1, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint32_t> values(q), first(q), second(q);
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t eps = i + 1;
      if (eps >= best_eps.load(std::memory_order_relaxed)) return;
      map(static_cast<std::uint32_t>(eps), values);
      const Collision c = first_collision(values, first, second);
      if (c.found()) {
        local[w] = {false, static_cast<std::uint32_t>(eps), c.a, c.b};
        std::uint64_t cur = best_eps.load();
        while (eps < cur && !best_eps.compare_exchange_weak(cur, eps)) {
        }
        return;
      }
    }
  });
  detail::TableVerdict out;
  for (const auto& v : local) {
    if (!v.planar && (out.planar || v.epsilon < out.epsilon)) out = v;
  }
  return out;
}

PlanarityVerdict to_verdict(const UniPoly& f, const Extension& ext, unsigned r, const detail::TableVerdict& tv) {
  PlanarityVerdict v;
  v.base_field = f.field().describe();
  v.field = ext.field.describe();
  v.r = r;
  v.planar = tv.planar;
  if (!tv.planar) {
    v.failing_epsilon = FieldElement(ext.field, tv.epsilon);
    v.colliding_pair = std::make_pair(FieldElement(ext.field, tv.a), FieldElement(ext.field, tv.b));
  }
  return v;
}

}  // namespace

namespace detail {

TableVerdict planar_from_table(const Field& field, std::span<const std::uint32_t> table, unsigned threads) {
  const std::uint64_t q = field.size();
  if (table.size() != q) throw std::invalid_argument("value table length differs from the field size");
  if (field.characteristic() == 2) {
    return scan_epsilons(field, threads, [&](std::uint32_t eps, std::vector<std::uint32_t>& out) {
      for (std::uint32_t x = 0; x < q; ++x)
        out[x] = table[field.add(x, eps)] ^ table[x] ^ field.mul(eps, x);
    });
  }
  return scan_epsilons(field, threads, [&](std::uint32_t eps, std::vector<std::uint32_t>& out) {
    for (std::uint32_t x = 0; x < q; ++x) out[x] = field.sub(table[field.add(x, eps)], table[x]);
  });
}

}  // namespace detail

PlanarityVerdict is_planar_odd(const UniPoly& f, unsigned r, const CheckOptions& options) {
  if (f.field().characteristic() == 2) throw std::invalid_argument("is_planar_odd requires odd characteristic");
  const Extension ext = checked_extension(f, r, options.guard);
  const auto table = f.embedded(ext.embedding).value_table();
  return to_verdict(f, ext, r, detail::planar_from_table(ext.field, table, options.threads));
}

PlanarityVerdict is_planar_even(const UniPoly& f, unsigned r, const CheckOptions& options) {
  if (f.field().characteristic() != 2) throw std::invalid_argument("is_planar_even requires characteristic 2");
  const Extension ext = checked_extension(f, r, options.guard);
  const auto table = f.embedded(ext.embedding).value_table();
  return to_verdict(f, ext, r, detail::planar_from_table(ext.field, table, options.threads));
}

PlanarityVerdict is_planar(const UniPoly& f, unsigned r, const CheckOptions& options) {
  return f.field().characteristic() == 2 ? is_planar_even(f, r, options) : is_planar_odd(f, r, options);
}

ApnVerdict apn_check(const UniPoly& f, unsigned r, const CheckOptions& options) {
  if (f.field().characteristic() != 2) throw std::invalid_argument("APN check requires characteristic 2");
  const Extension ext = checked_extension(f, r, options.guard);
  const Field& field = ext.field;
  const auto table = f.embedded(ext.embedding).value_table();
  const std::uint64_t q = field.size();

  struct Bad {
    std::uint64_t eps = 0;
    std::uint32_t value = 0;
    std::uint64_t multiplicity = 0;
  };
  std::atomic<std::uint64_t> best_eps{q};
  const unsigned workers = std::max(1u, options.threads);
  std::vector<Bad> local(workers);
  parallel_ranges(q - 1, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> counts(q);
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t eps = i + 1;
      if (eps >= best_eps.load(std::memory_order_relaxed)) return;
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t x = 0; x < q; ++x) ++counts[table[field.add(x, static_cast<std::uint32_t>(eps))] ^ table[x]];
      for (std::uint32_t v = 0; v < q; ++v) {
        if (counts[v] != 0 && counts[v] != 2) {
          local[w] = {eps, v, counts[v]};
          std::uint64_t cur = best_eps.load();
          while (eps < cur && !best_eps.compare_exchange_weak(cur, eps)) {
          }
          return;
        }
      }
    }
  });

  ApnVerdict out;
  out.field = field.describe();
  out.r = r;
  out.apn = true;
  const Bad* best = nullptr;
  for (const auto& b : local)
    if (b.eps != 0 && (best == nullptr || b.eps < best->eps)) best = &b;
  if (best != nullptr) {
    out.apn = false;
    out.failing_epsilon = FieldElement(field, static_cast<std::uint32_t>(best->eps));
    out.bad_value = FieldElement(field, best->value);
    out.bad_multiplicity = best->multiplicity;
  }
  return out;
}

bool is_apn(const UniPoly& f, unsigned r, const CheckOptions& options) { return apn_check(f, r, options).apn; }

bool permutation_check(std::span<const FieldElement> values) {
  if (values.empty()) throw std::invalid_argument("permutation check of an empty sequence");
  const Field field = values.front().field();
  if (values.size() != field.size()) throw std::invalid_argument("sequence length differs from the field size");
  std::vector<bool> seen(field.size(), false);
  for (const auto& v : values) {
    if (!(v.field() == field)) throw std::invalid_argument("values from different fields");
    if (seen[v.code()]) return false;
    seen[v.code()] = true;
  }
  return true;
}

bool witness_is_valid(const UniPoly& f, const PlanarityVerdict& verdict) {
  if (verdict.planar || !verdict.failing_epsilon || !verdict.colliding_pair) return false;
  const Extension ext = make_extension(f.field(), verdict.r);
  const FieldElement eps = *verdict.failing_epsilon;
  const auto [a, b] = *verdict.colliding_pair;
  if (eps.is_zero() || a == b) return false;
  auto diff = [&](const FieldElement& x) {
    if (f.field().characteristic() == 2) {
      return f.evaluate(x + eps, ext.embedding) + f.evaluate(x, ext.embedding) + eps * x;
    }
    return f.evaluate(x + eps, ext.embedding) - f.evaluate(x, ext.embedding);
  };
  return diff(a) == diff(b);
}

}  // namespace planarlab
