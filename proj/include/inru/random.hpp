#pragma once

#include <cstdint>
#include <algorithm>
#include <random>
#include <thread>
#include <vector>

namespace inru {

// Experiment randomness. Every work item draws from its own std::mt19937_64
// seeded through std::seed_seq with (seed, stream), so results depend only on
// the user seed and the item index, never on thread count or scheduling.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x494e5255u};
  return std::mt19937_64(seq);
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Callers write into
// pre-sized per-item slots and merge afterwards in index order.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn)
{
  const std::size_t workers =
    std::min<std::size_t>(count, jobs < 1 ? 1 : static_cast<std::size_t>(jobs));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; i++) {
      fn(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; w++) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        fn(i);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
}

} // namespace inru
