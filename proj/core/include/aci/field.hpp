#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aci {

/// Arithmetic in Z/pZ for a prime p < 2^31. Elements are plain uint32_t
/// values kept in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
      throw std::invalid_argument("characteristic must be a prime below 2^31, got " +
                                  std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(a, p_ - 2);
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1, base = a % p_;
    while (e != 0) {
      if (e & 1) r = r * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t to_symmetric(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace aci
