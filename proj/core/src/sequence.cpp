#include "collatz/sequence.hpp"

#include <limits>
#include <stdexcept>

namespace collatz {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u128 kU128Max = ~static_cast<u128>(0);
constexpr u128 kOddStepCeiling = (kU128Max - 1) / 3;

struct SmallState {
  u128 value;
  u64 steps;
  u64 evens;
};

// Continues a stopping-time search in exact arithmetic after the
// fixed-width path ran out of headroom. `below` is the start value.
std::optional<StopResult> stopping_time_big(Nat cur, const Nat& below,
                                            u64 steps, u64 evens,
                                            u64 max_steps) {
  while (steps < max_steps) {
    if (cur.is_odd()) {
      cur *= 3;
      cur += 1;
    } else {
      cur >>= 1;
      ++evens;
    }
    ++steps;
    if (cur < below) return StopResult{steps, evens, std::move(cur)};
  }
  return std::nullopt;
}

std::optional<u64> total_stopping_big(Nat cur, u64 steps, u64 max_steps) {
  const Nat one(1);
  if (cur == one) return steps;
  while (steps < max_steps) {
    if (cur.is_odd()) {
      cur *= 3;
      cur += 1;
    } else {
      cur >>= 1;
    }
    ++steps;
    if (cur == one) return steps;
  }
  return std::nullopt;
}
}  // namespace

Nat collatz_step(const Nat& c) {
  if (c.is_zero()) throw std::domain_error("collatz_step: value must be >= 1");
  if (c.is_odd()) {
    Nat next = c;
    next *= 3;
    next += 1;
    return next;
  }
  Nat next = c;
  next >>= 1;
  return next;
}

std::vector<Nat> collatz_sequence(const Nat& c, u64 max_steps) {
  if (c.is_zero())
    throw std::domain_error("collatz_sequence: value must be >= 1");
  std::vector<Nat> seq;
  seq.push_back(c);
  const Nat one(1);
  for (u64 i = 0; i < max_steps && !(seq.back() == one); ++i) {
    seq.push_back(collatz_step(seq.back()));
  }
  return seq;
}

std::optional<StopResult> stopping_time(const Nat& c, u64 max_steps) {
  if (c < Nat(2))
    throw std::domain_error("stopping_time: value must be >= 2");
  if (!c.fits_u64()) return stopping_time_big(c, c, 0, 0, max_steps);

  const u64 start = c.to_u64();
  SmallState s{start, 0, 0};
  while (s.steps < max_steps) {
    if (s.value & 1) {
      if (s.value > kOddStepCeiling)
        return stopping_time_big(Nat::from_u128(s.value), c, s.steps, s.evens,
                                 max_steps);
      s.value = 3 * s.value + 1;
    } else {
      s.value >>= 1;
      ++s.evens;
    }
    ++s.steps;
    if (s.value < start)
      return StopResult{s.steps, s.evens, Nat::from_u128(s.value)};
  }
  return std::nullopt;
}

std::optional<u64> total_stopping_time(const Nat& c, u64 max_steps) {
  if (c.is_zero())
    throw std::domain_error("total_stopping_time: value must be >= 1");
  if (!c.fits_u64()) return total_stopping_big(c, 0, max_steps);

  u128 value = c.to_u64();
  u64 steps = 0;
  if (value == 1) return steps;
  while (steps < max_steps) {
    if (value & 1) {
      if (value > kOddStepCeiling)
        return total_stopping_big(Nat::from_u128(value), steps, max_steps);
      value = 3 * value + 1;
    } else {
      value >>= 1;
    }
    ++steps;
    if (value == 1) return steps;
  }
  return std::nullopt;
}

}  // namespace collatz
