#pragma once

/// Mod-12 column classification of sequence values.
///
/// column = C mod 12 with a zero remainder reported as column 12, so
/// every natural is 12r + column with r >= 0. Odd columns step to a
/// single column; even columns split on the parity of the row.

#include <array>
#include <cstdint>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

struct ColumnStep {
  Nat value;
  Nat row;      // value = 12*row + column
  int column;   // 1..12
};

/// c mod 12, 0 mapped to 12. Rejects c = 0.
int column_of(const Nat& c);

/// Columns reachable in one Collatz step from the given column, derived
/// from the 12r+c algebra and self-checked on first use.
const std::vector<int>& column_step_targets(int column);

/// Sequence values annotated with (row, column); stops at 1 or after
/// max_steps steps.
std::vector<ColumnStep> column_trace(const Nat& c, std::uint64_t max_steps);

}  // namespace collatz
