#include <cstdint>
#include <vector>

#include "anum/engine.hpp"
#include "sa_kernel_common.hpp"

namespace anum::kernels {

namespace {

template <class T>
bool serial_table(const Graph& g, std::vector<T>& out) {
  const Mask top = full_mask(g.order());
  out.assign(static_cast<std::size_t>(top) + 1, T(0));
  out[0] = T(1);
  // Numeric order visits every proper subset before its superset.
  for (Mask s = 1; s != 0 && s <= top; ++s) {
    if (!detail::sa_step(g, s, out)) return false;
  }
  return true;
}

}  // namespace

bool sa_table_serial(const Graph& g, std::vector<std::int64_t>& out) { return serial_table(g, out); }

void sa_table_serial(const Graph& g, std::vector<BigInt>& out) { serial_table(g, out); }

}  // namespace anum::kernels
