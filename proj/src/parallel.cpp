#include "pickfreeze/parallel.hpp"

#include <atomic>
#include <omp.h>

namespace pickfreeze {

namespace {
std::atomic<int> g_default_workers{0};
}

int default_workers() noexcept {
  const int w = g_default_workers.load();
  return w > 0 ? w : omp_get_max_threads();
}

void set_default_workers(int workers) noexcept { g_default_workers.store(workers > 0 ? workers : 0); }

int resolve_workers(int requested) noexcept { return requested > 0 ? requested : default_workers(); }

}  // namespace pickfreeze
