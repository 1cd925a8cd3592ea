// Deterministic block-parallel map over an integer range.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace artin {

inline constexpr std::uint64_t kScanBlock = std::uint64_t{1} << 16;

inline unsigned resolve_workers(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [lo, hi) into blocks of `block` integers and evaluates
// fn(block_lo, block_hi) for each. Results come back in block order, so the
// output is independent of the worker count.
template <class Fn>
auto map_blocks(std::uint64_t lo, std::uint64_t hi, unsigned workers, Fn fn,
                std::uint64_t block = kScanBlock) {
  using R = decltype(fn(lo, hi));
  std::vector<R> results;
  if (hi <= lo) return results;
  const std::uint64_t nblocks = (hi - lo + block - 1) / block;
  results.resize(nblocks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::uint64_t b; (b = next.fetch_add(1)) < nblocks;) {
      try {
        const std::uint64_t a = lo + b * block;
        results[b] = fn(a, std::min(hi, a + block));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = nblocks;
      }
    }
  };
  const unsigned n = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_workers(workers), nblocks));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace artin
