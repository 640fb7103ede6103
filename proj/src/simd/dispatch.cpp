#include <atomic>
#include <cstdlib>
#include <cstring>

#include "dotconf/simd/kernels.hpp"

namespace dotconf::simd {

namespace {

const KernelTable kGeneric{"generic", &generic::dot_row, &generic::count_equal};

#if defined(DOTCONF_HAVE_AVX2)
const KernelTable kAvx2{"avx2", &avx2::dot_row, &avx2::count_equal};
#endif
#if defined(DOTCONF_HAVE_NEON)
const KernelTable kNeon{"neon", &neon::dot_row, &neon::count_equal};
#endif

std::atomic<const KernelTable*> g_override{nullptr};

const KernelTable& select_kernels() {
  const char* env = std::getenv("DOTCONF_SIMD");
  if (env != nullptr && std::strcmp(env, "generic") == 0) return kGeneric;
  if (const KernelTable* t = avx2_kernels()) return *t;
  if (const KernelTable* t = neon_kernels()) return *t;
  return kGeneric;
}

}  // namespace

const KernelTable& generic_kernels() { return kGeneric; }

const KernelTable* avx2_kernels() {
#if defined(DOTCONF_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(DOTCONF_HAVE_NEON)
  return &kNeon;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  if (const KernelTable* t = g_override.load(std::memory_order_acquire)) return *t;
  static const KernelTable& selected = select_kernels();
  return selected;
}

void override_kernels(const KernelTable* table) {
  g_override.store(table, std::memory_order_release);
}

}  // namespace dotconf::simd
