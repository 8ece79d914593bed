#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace mdim::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(MDIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* pick() {
  const char* env = std::getenv("MDIM_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
  if (const KernelTable* t = avx2()) return t;
  return &scalar();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{pick()};
  return current;
}

}  // namespace

const KernelTable* avx2() {
#if defined(MDIM_HAVE_AVX2)
  if (cpu_has_avx2()) return &avx2_table();
#endif
  return nullptr;
}

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(const KernelTable& table) { slot().store(&table, std::memory_order_relaxed); }

}  // namespace mdim::kernels
