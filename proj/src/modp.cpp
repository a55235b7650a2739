#include "blowup/modp.hpp"

#include "blowup/errors.hpp"

namespace blowup {

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    throw kernel_error("coefficient modulus must be a prime <= " +
                       std::to_string(kMaxPrime) + ", got " +
                       std::to_string(p));
  }
  mu_ = static_cast<uint32_t>((static_cast<uint64_t>(1) << 32) / p_);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % p_;
  uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw kernel_error("division by zero in F_p");
  // extended Euclid
  int64_t t = 0, nt = 1;
  int64_t r = p_, nr = a % p_;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

bool PrimeField::is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace blowup
