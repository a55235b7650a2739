#include "blowup/errors.hpp"
#include "blowup/modp.hpp"

namespace blowup::kernels {

#if defined(BLOWUP_HAVE_AVX2)
const Backend* avx2_backend();  // defined in modp_kernels_avx2.cpp
#endif

namespace {

void axpy_scalar(uint32_t* dst, const uint32_t* src, size_t n, uint32_t c,
                 uint32_t p, uint32_t /*mu*/) {
  for (size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<uint32_t>(
        (dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
  }
}

void scale_scalar(uint32_t* dst, size_t n, uint32_t c, uint32_t p,
                  uint32_t /*mu*/) {
  for (size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * dst[i] % p);
  }
}

const Backend kScalar{"scalar", axpy_scalar, scale_scalar};

const Backend* pick_auto() {
#if defined(BLOWUP_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return avx2_backend();
#endif
  return &kScalar;
}

const Backend* g_active = nullptr;

}  // namespace

const Backend& scalar() { return kScalar; }

const Backend& active() {
  if (!g_active) g_active = pick_auto();
  return *g_active;
}

void force(const std::string& name) {
  if (name == "auto") {
    g_active = pick_auto();
    return;
  }
  if (name == "scalar") {
    g_active = &kScalar;
    return;
  }
#if defined(BLOWUP_HAVE_AVX2)
  if (name == "avx2") {
    if (!__builtin_cpu_supports("avx2"))
      throw kernel_error("avx2 backend requested but CPU lacks AVX2");
    g_active = avx2_backend();
    return;
  }
#endif
  throw kernel_error("unknown or unavailable kernel backend: " + name);
}

}  // namespace blowup::kernels
