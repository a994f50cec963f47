#ifndef QOT_THREAD_POOL_HPP
#define QOT_THREAD_POOL_HPP

// Fork-join map over an index range with results collected by index, so the
// output is byte-identical for any worker count. Worker w owns the stride
// w, w + workers, w + 2*workers, ... and fn must be safe to call
// concurrently for distinct indices.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace qot {

inline unsigned hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1u : n;
}

template <typename Fn>
auto parallel_map(std::size_t n, unsigned n_threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using T = std::invoke_result_t<Fn&, std::size_t>;
  static_assert(std::is_default_constructible_v<T>,
                "parallel_map collects results into a pre-sized vector");
  std::vector<T> out(n);
  if (n == 0) return out;

  std::size_t workers = std::min<std::size_t>(n_threads == 0 ? 1 : n_threads, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }

  // Each worker stops at its first failure; the failure kept is the one with
  // the smallest index, which is the same exception a serial loop would have
  // surfaced first among the indices that were attempted.
  std::mutex err_mu;
  std::size_t err_index = n;
  std::exception_ptr err;

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (i < err_index) {
            err_index = i;
            err = std::current_exception();
          }
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace qot

#endif  // QOT_THREAD_POOL_HPP
