#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace richseed {

int hardware_threads();

// Runs fn(i) for i in [0, n). With use_omp the iterations are distributed
// over OpenMP threads; each index writes only its own slot, so results are
// identical to the serial path and ordered by input index. Falls back to
// serial when built without OpenMP.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  bool use_omp, int threads = 0);

template <typename R>
std::vector<R> parallel_transform(std::size_t n, const std::function<R(std::size_t)>& fn,
                                  bool use_omp, int threads = 0) {
  std::vector<R> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); }, use_omp, threads);
  return out;
}

}  // namespace richseed
