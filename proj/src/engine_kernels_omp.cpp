#include <omp.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "anum/engine.hpp"
#include "sa_kernel_common.hpp"

namespace anum::kernels {

namespace {

/// Masks of 1..n-bit subsets grouped by popcount; layer k only reads layers < k.
std::vector<std::vector<Mask>> popcount_layers(int n) {
  std::vector<std::vector<Mask>> layers(static_cast<std::size_t>(n) + 1);
  const Mask top = full_mask(n);
  for (Mask s = 1; s != 0 && s <= top; ++s) layers[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  return layers;
}

template <class T>
bool parallel_table(const Graph& g, std::vector<T>& out) {
  const Mask top = full_mask(g.order());
  out.assign(static_cast<std::size_t>(top) + 1, T(0));
  out[0] = T(1);
  bool ok = true;
  for (const auto& layer : popcount_layers(g.order())) {
    const auto count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
    for (std::int64_t i = 0; i < count; ++i) {
      ok = detail::sa_step(g, layer[static_cast<std::size_t>(i)], out) && ok;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool sa_table_parallel(const Graph& g, std::vector<std::int64_t>& out) { return parallel_table(g, out); }

void sa_table_parallel(const Graph& g, std::vector<BigInt>& out) { parallel_table(g, out); }

}  // namespace anum::kernels
