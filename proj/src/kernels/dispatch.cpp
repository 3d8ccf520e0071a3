#include "hgnoise/kernels.hpp"

#include <atomic>

namespace hgnoise::kernels {

#if defined(HGNOISE_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_kernel_table();
}
#endif

namespace {

const KernelTable& detect() {
  if (const KernelTable* t = avx2_table()) return *t;
  return scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{&detect()};
  return table;
}

}  // namespace

const KernelTable* avx2_table() {
#if defined(HGNOISE_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (supported) return &detail::avx2_kernel_table();
#endif
  return nullptr;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select(Backend backend) {
  const KernelTable* table = backend == Backend::avx2 ? avx2_table() : &scalar_table();
  if (table == nullptr) return false;
  current().store(table, std::memory_order_release);
  return true;
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace hgnoise::kernels
