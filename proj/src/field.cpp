#include "symhecke/field.hpp"

namespace symhecke {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2) throw DomainError("characteristic 2 is not supported");
  if (p >= (1ULL << 31) || !is_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime");
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) { require_odd_prime(p); }

std::uint32_t PrimeField::reduce(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

namespace modp {
std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}
}  // namespace modp

}  // namespace symhecke
