#include "hitchin/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace hitchin {

namespace {
std::atomic<int> g_threads{1};
}

void set_threads(int t) { g_threads.store(t < 1 ? 1 : t); }
int threads() { return g_threads.load(); }

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
  const int count = end - begin;
  const int nt = g_threads.load();
  if (nt <= 1 || count < 64) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  const int workers = nt < count ? nt : count;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + w * chunk;
    const int hi = lo + chunk < end ? lo + chunk : end;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hitchin
