#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <stdexcept>

namespace aci {

/// Upper bound on the number of ring variables.
inline constexpr int kMaxVars = 32;
/// Largest exponent a single variable may carry.
inline constexpr int kMaxExponent = 255;

/// Exponent vector with a cached total degree. Slots beyond the ring's
/// variable count are always zero, so comparisons never need the ring.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
      throw std::length_error("too many variables for a monomial");
    }
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > kMaxExponent) {
        throw std::overflow_error("monomial exponent out of range");
      }
      m.exp_[i] = static_cast<std::uint8_t>(exps[i]);
      m.deg_ = static_cast<std::uint16_t>(m.deg_ + exps[i]);
    }
    return m;
  }

  static Monomial variable(int index, int power = 1) {
    if (index < 0 || index >= kMaxVars) throw std::out_of_range("variable index");
    if (power < 0 || power > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
    Monomial m;
    m.exp_[index] = static_cast<std::uint8_t>(power);
    m.deg_ = static_cast<std::uint16_t>(power);
    return m;
  }

  int degree() const { return deg_; }
  int operator[](int i) const { return exp_[i]; }
  bool is_one() const { return deg_ == 0; }

  /// Exponents of the first n variables.
  std::array<int, kMaxVars> exponents() const {
    std::array<int, kMaxVars> out{};
    for (int i = 0; i < kMaxVars; ++i) out[i] = exp_[i];
    return out;
  }

  /// Bit i set iff variable i occurs.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      if (exp_[i] != 0) s |= (1u << i);
    }
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    if (a.deg_ + b.deg_ > kMaxExponent) {
      for (int i = 0; i < kMaxVars; ++i) {
        if (a.exp_[i] + b.exp_[i] > kMaxExponent) {
          throw std::overflow_error("monomial exponent overflow");
        }
      }
    }
    // No byte can carry once the overflow check above has passed.
    for (int w = 0; w < kWords; ++w) r.set_word(w, a.word(w) + b.word(w));
    r.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
    return r;
  }

  /// True iff this monomial divides other.
  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t a = word(w), b = other.word(w);
      if (a == 0 || a == b) continue;
      for (int i = w * 8; i < w * 8 + 8; ++i) {
        if (exp_[i] > other.exp_[i]) return false;
      }
    }
    return true;
  }

  /// other / this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const {
    Monomial r;
    // Bytewise subtraction cannot borrow when this divides other.
    for (int w = 0; w < kWords; ++w) r.set_word(w, other.word(w) - word(w));
    r.deg_ = static_cast<std::uint16_t>(other.deg_ - deg_);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      d += r.exp_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
      d += r.exp_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
    }
    return true;
  }

  bool operator==(const Monomial& o) const {
    return deg_ == o.deg_ && std::memcmp(exp_.data(), o.exp_.data(), kMaxVars) == 0;
  }

  /// Index of the last variable whose exponents differ, or -1.
  int last_difference(const Monomial& o) const {
    for (int w = kWords - 1; w >= 0; --w) {
      std::uint64_t x = word(w) ^ o.word(w);
      if (x != 0) return w * 8 + (63 - __builtin_clzll(x)) / 8;
    }
    return -1;
  }

  /// Plain lexicographic comparison of exponent arrays; only for use as a
  /// container key, not a monomial order.
  bool key_less(const Monomial& o) const { return exp_ < o.exp_; }

  std::size_t hash() const {
    std::uint64_t h = deg_;
    for (int w = 0; w < kWords; ++w) h = (h ^ word(w)) * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

 private:
  static constexpr int kWords = kMaxVars / 8;

  std::uint64_t word(int w) const {
    std::uint64_t v;
    std::memcpy(&v, exp_.data() + 8 * w, 8);
    return v;
  }
  void set_word(int w, std::uint64_t v) { std::memcpy(exp_.data() + 8 * w, &v, 8); }

  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.key_less(b); }
};

}  // namespace aci
