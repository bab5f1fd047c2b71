#include "looplab/random.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace looplab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

namespace {

bool env_integer(const char* name, unsigned long long& out) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return false;
  try {
    std::size_t used = 0;
    out = std::stoull(v, &used);
    return used == std::string(v).size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::uint64_t default_seed(std::uint64_t fallback) {
  unsigned long long v = 0;
  return env_integer("LOOPLAB_SEED", v) ? v : fallback;
}

int default_workers() {
  unsigned long long v = 0;
  if (env_integer("LOOPLAB_THREADS", v) && v > 0) return static_cast<int>(v);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t count = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, workers)));
  if (count == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(count);
  for (std::size_t t = 0; t < count; ++t) threads.emplace_back(run);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace looplab
