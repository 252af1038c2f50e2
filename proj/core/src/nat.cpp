#include "collatz/nat.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace collatz {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// 10^19 is the largest power of ten below 2^64.
constexpr u64 kDecChunk = 10000000000000000000ull;
constexpr int kDecChunkDigits = 19;
}  // namespace

void Nat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Nat Nat::from_u128(u128 v) {
  Nat n;
  if (v != 0) {
    n.limbs_.push_back(static_cast<u64>(v));
    u64 hi = static_cast<u64>(v >> 64);
    if (hi != 0) n.limbs_.push_back(hi);
  }
  return n;
}

Nat Nat::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Nat: empty decimal string");
  Nat n;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t take = std::min<std::size_t>(kDecChunkDigits, s.size() - i);
    u64 chunk = 0;
    u64 scale = 1;
    for (std::size_t j = 0; j < take; ++j, ++i) {
      char c = s[i];
      if (c < '0' || c > '9')
        throw std::invalid_argument("Nat: invalid decimal digit");
      chunk = chunk * 10 + static_cast<u64>(c - '0');
      scale *= 10;
    }
    n *= scale;
    n += Nat(chunk);
  }
  return n;
}

Nat Nat::pow2(u64 e) {
  Nat n(1);
  n <<= e;
  return n;
}

Nat Nat::pow(const Nat& base, u64 exp) {
  Nat result(1);
  Nat b = base;
  while (exp != 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

bool Nat::is_power_of_two() const {
  if (limbs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < limbs_.size(); ++i)
    if (limbs_[i] != 0) return false;
  return std::has_single_bit(limbs_.back());
}

u64 Nat::to_u64() const {
  if (limbs_.size() > 1) throw std::overflow_error("Nat: value exceeds 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::size_t Nat::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) +
         static_cast<std::size_t>(std::bit_width(limbs_.back()));
}

u64 Nat::trailing_zeros() const {
  if (limbs_.empty()) throw std::domain_error("Nat: trailing_zeros of zero");
  u64 tz = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] == 0) {
      tz += 64;
    } else {
      return tz + static_cast<u64>(std::countr_zero(limbs_[i]));
    }
  }
  return tz;  // unreachable: trimmed non-zero value has a non-zero limb
}

Nat& Nat::operator+=(const Nat& rhs) {
  const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  limbs_.resize(n, 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    u128 sum = static_cast<u128>(limbs_[i]) + carry;
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<u64>(sum);
    carry = static_cast<u64>(sum >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

Nat& Nat::operator-=(const Nat& rhs) {
  if (*this < rhs) throw std::domain_error("Nat: subtraction below zero");
  u64 borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sub = static_cast<u128>(borrow);
    if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
    if (static_cast<u128>(limbs_[i]) >= sub) {
      limbs_[i] = static_cast<u64>(limbs_[i] - static_cast<u64>(sub));
      borrow = 0;
    } else {
      limbs_[i] = static_cast<u64>((static_cast<u128>(1) << 64) + limbs_[i] - sub);
      borrow = 1;
    }
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

Nat& Nat::operator*=(u64 rhs) {
  if (rhs == 0 || limbs_.empty()) {
    limbs_.clear();
    return *this;
  }
  u64 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 prod = static_cast<u128>(limbs_[i]) * rhs + carry;
    limbs_[i] = static_cast<u64>(prod);
    carry = static_cast<u64>(prod >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  if (limbs_.empty() || rhs.limbs_.empty()) {
    limbs_.clear();
    return *this;
  }
  if (rhs.limbs_.size() == 1) return *this *= rhs.limbs_[0];
  std::vector<u64> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u64 carry = 0;
    const u128 a = limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      u128 cur = a * rhs.limbs_[j] + out[i + j] + carry;
      out[i + j] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry) {
      u128 cur = static_cast<u128>(out[k]) + carry;
      out[k] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
      ++k;
    }
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

Nat& Nat::operator<<=(u64 bits) {
  if (limbs_.empty() || bits == 0) return *this;
  const std::size_t limb_shift = bits / 64;
  const unsigned bit_shift = bits % 64;
  const std::size_t old_size = limbs_.size();
  limbs_.resize(old_size + limb_shift + (bit_shift ? 1 : 0), 0);
  for (std::size_t i = old_size; i-- > 0;) {
    u64 lo = limbs_[i] << bit_shift;
    u64 hi = bit_shift ? (limbs_[i] >> (64 - bit_shift)) : 0;
    limbs_[i + limb_shift] = lo;
    if (hi) limbs_[i + limb_shift + 1] |= hi;
  }
  for (std::size_t i = 0; i < limb_shift; ++i) limbs_[i] = 0;
  trim();
  return *this;
}

Nat& Nat::operator>>=(u64 bits) {
  if (limbs_.empty() || bits == 0) return *this;
  const std::size_t limb_shift = bits / 64;
  const unsigned bit_shift = bits % 64;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  const std::size_t new_size = limbs_.size() - limb_shift;
  for (std::size_t i = 0; i < new_size; ++i) {
    u64 lo = limbs_[i + limb_shift] >> bit_shift;
    u64 hi = 0;
    if (bit_shift && i + limb_shift + 1 < limbs_.size())
      hi = limbs_[i + limb_shift + 1] << (64 - bit_shift);
    limbs_[i] = lo | hi;
  }
  limbs_.resize(new_size);
  trim();
  return *this;
}

std::pair<Nat, u64> Nat::divmod_u64(u64 d) const {
  if (d == 0) throw std::domain_error("Nat: division by zero");
  Nat q;
  q.limbs_.assign(limbs_.size(), 0);
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (rem << 64) | limbs_[i];
    q.limbs_[i] = static_cast<u64>(cur / d);
    rem = cur % d;
  }
  q.trim();
  return {std::move(q), static_cast<u64>(rem)};
}

std::strong_ordering Nat::operator<=>(const Nat& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::string Nat::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::string out;
  Nat cur = *this;
  while (!cur.is_zero()) {
    auto [q, r] = cur.divmod_u64(kDecChunk);
    std::string part = std::to_string(r);
    if (!q.is_zero()) part.insert(0, kDecChunkDigits - part.size(), '0');
    out.insert(0, part);
    cur = std::move(q);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) {
  return os << n.to_decimal();
}

}  // namespace collatz
