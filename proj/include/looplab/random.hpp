#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace looplab {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Per-sample stream seed; results never depend on how samples are spread over workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

inline Rng make_rng(std::uint64_t master, std::uint64_t index) { return Rng(derive_seed(master, index)); }

/// LOOPLAB_SEED from the environment if set and numeric, otherwise `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 20240521);

/// Worker count: LOOPLAB_THREADS if set, otherwise hardware concurrency (at least 1).
int default_workers();

/// Calls body(i) for i in [0, n) on up to `workers` threads. The first exception thrown by
/// any call is rethrown after all workers have stopped.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body);

}  // namespace looplab
