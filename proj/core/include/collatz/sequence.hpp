#pragma once

/// Exact Collatz iteration and stopping-time measurement.
///
/// All operations are pure; arithmetic is exact at any magnitude. The
/// stopping-time searches use a 128-bit fast path that promotes to Nat
/// before any overflow, so results are identical to the all-Nat route.

#include <cstdint>
#include <optional>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

/// First iterate below the start: S steps, of which E were halvings.
struct StopResult {
  std::uint64_t stopping_time = 0;  // S
  std::uint64_t even_steps = 0;     // E; S - E odd steps
  Nat final_value;                  // first iterate < start
};

inline constexpr std::uint64_t kDefaultStoppingLimit = 1'000'000;
inline constexpr std::uint64_t kDefaultTotalStoppingLimit = 10'000'000;

/// 3c+1 for odd c, c/2 for even c. Rejects c = 0.
Nat collatz_step(const Nat& c);

/// [c, step(c), step^2(c), ...] truncated at max_steps steps or at the
/// first occurrence of 1, whichever comes first.
std::vector<Nat> collatz_sequence(const Nat& c, std::uint64_t max_steps);

/// Steps to the first iterate smaller than c, with the halving count.
/// Rejects c < 2 (1 cycles 1->4->2->1 and never drops below itself).
/// nullopt = no iterate < c within max_steps; a result, not an error.
std::optional<StopResult> stopping_time(
    const Nat& c, std::uint64_t max_steps = kDefaultStoppingLimit);

/// Steps to the first iterate equal to 1 (0 if c is already 1).
std::optional<std::uint64_t> total_stopping_time(
    const Nat& c, std::uint64_t max_steps = kDefaultTotalStoppingLimit);

}  // namespace collatz
