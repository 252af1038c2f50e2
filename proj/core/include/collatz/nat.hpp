#pragma once

/// Arbitrary-precision natural number.
///
/// All sequence values, offsets and coefficients in this library are
/// naturals; arithmetic is exact with no fixed-width overflow. Limbs are
/// 64-bit, little-endian, with no leading zero limbs (zero = no limbs).
/// Subtraction below zero throws; naturals are not closed under it.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace collatz {

class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
  }

  static Nat from_decimal(std::string_view s);  // throws std::invalid_argument
  static Nat from_u128(unsigned __int128 v);
  static Nat pow2(std::uint64_t e);
  static Nat pow(const Nat& base, std::uint64_t exp);

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  bool is_even() const { return !is_odd(); }
  bool is_power_of_two() const;

  bool fits_u64() const { return limbs_.size() <= 1; }
  std::uint64_t to_u64() const;  // throws std::overflow_error if too large

  std::size_t bit_length() const;       // 0 for zero
  std::uint64_t trailing_zeros() const; // 2-adic valuation; throws on zero

  std::string to_decimal() const;

  Nat& operator+=(const Nat& rhs);
  Nat& operator-=(const Nat& rhs);  // throws std::domain_error if rhs > *this
  Nat& operator*=(const Nat& rhs);
  Nat& operator*=(std::uint64_t rhs);
  Nat& operator<<=(std::uint64_t bits);
  Nat& operator>>=(std::uint64_t bits);

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator-(Nat lhs, const Nat& rhs) { return lhs -= rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }
  friend Nat operator*(Nat lhs, std::uint64_t rhs) { return lhs *= rhs; }
  friend Nat operator*(std::uint64_t lhs, Nat rhs) { return rhs *= lhs; }
  friend Nat operator<<(Nat lhs, std::uint64_t bits) { return lhs <<= bits; }
  friend Nat operator>>(Nat lhs, std::uint64_t bits) { return lhs >>= bits; }

  /// Quotient and remainder by a single-limb divisor (divisor != 0).
  std::pair<Nat, std::uint64_t> divmod_u64(std::uint64_t d) const;
  std::uint64_t mod_u64(std::uint64_t m) const { return divmod_u64(m).second; }

  std::strong_ordering operator<=>(const Nat& rhs) const;
  bool operator==(const Nat& rhs) const { return limbs_ == rhs.limbs_; }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n);

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

}  // namespace collatz
