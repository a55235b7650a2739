#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace blowup {

// Arithmetic in Z/p for a prime p. The bound p <= 46337 keeps p*p below
// 2^31 so the vector kernels can accumulate a full product plus a reduced
// element in an unsigned 32-bit lane.
class PrimeField {
 public:
  static constexpr uint32_t kMaxPrime = 46337;
  static constexpr uint32_t kDefaultPrime = 32003;

  explicit PrimeField(uint32_t p = kDefaultPrime);

  uint32_t p() const { return p_; }
  // floor(2^32 / p), used by the Barrett reduction in the vector kernels.
  uint32_t barrett_mu() const { return mu_; }

  uint32_t reduce(uint64_t v) const { return static_cast<uint32_t>(v % p_); }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return reduce(static_cast<uint64_t>(a) * b);
  }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;  // a != 0

  static bool is_prime(uint32_t n);

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
  uint32_t mu_;
};

namespace kernels {

// dst[i] = (dst[i] + c * src[i]) mod p, with c, src[i], dst[i] in [0, p).
using AxpyFn = void (*)(uint32_t* dst, const uint32_t* src, size_t n,
                        uint32_t c, uint32_t p, uint32_t mu);
// dst[i] = (c * dst[i]) mod p.
using ScaleFn = void (*)(uint32_t* dst, size_t n, uint32_t c, uint32_t p,
                         uint32_t mu);

struct Backend {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
};

const Backend& scalar();
const Backend& active();
// Force a backend by name for tests: "scalar", "avx2" or "auto".
// Throws kernel_error if the backend is unavailable on this machine.
void force(const std::string& name);

}  // namespace kernels

}  // namespace blowup
