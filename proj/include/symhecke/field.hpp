#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symhecke {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Odd prime field F_p. Elements are plain residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Throws DomainError unless p is an odd prime below 2^31.
void require_odd_prime(std::uint64_t p);

namespace modp {
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
}  // namespace modp

}  // namespace symhecke
