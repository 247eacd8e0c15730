#ifndef PLANARLAB_PARALLEL_HPP
#define PLANARLAB_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace planarlab {

/// Splits [0, count) into `workers` contiguous ranges and calls
/// fn(worker, begin, end) for each, one thread per range. The split depends
/// only on (count, workers); callers merge per-worker results in worker order.
template <typename Fn>
void parallel_ranges(std::uint64_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (count < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(1, count));
  if (workers == 1) {
    fn(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = count / workers, extra = count % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace planarlab

#endif  // PLANARLAB_PARALLEL_HPP
