#include "collatz/columns.hpp"

#include <stdexcept>

#include "collatz/sequence.hpp"

namespace collatz {

namespace {

// Table of resulting columns per starting column. Stored as constants,
// re-derived from the 12r + c algebra on first use: an odd column c
// steps to 36r + 3c + 1, an even column to 6r + c/2, whose column
// depends on the parity of r.
const std::array<std::vector<int>, 12> kColumnTargets = {{
    {4},       // 1
    {1, 7},    // 2
    {10},      // 3
    {2, 8},    // 4
    {4},       // 5
    {3, 9},    // 6
    {10},      // 7
    {4, 10},   // 8
    {4},       // 9
    {5, 11},   // 10
    {10},      // 11
    {6, 12},   // 12
}};

int normalize_column(std::uint64_t residue) {
  return residue == 0 ? 12 : static_cast<int>(residue);
}

std::array<std::vector<int>, 12> derive_targets() {
  std::array<std::vector<int>, 12> derived;
  for (int col = 1; col <= 12; ++col) {
    if (col % 2 == 1) {
      // 3(12r + col) + 1 = 36r + 3col + 1
      derived[col - 1] = {normalize_column((3 * col + 1) % 12)};
    } else {
      // (12r + col)/2 = 6r + col/2; column col/2 for even r, col/2 + 6 odd r
      int a = normalize_column(col / 2);
      int b = normalize_column(col / 2 + 6);
      derived[col - 1] = {a, b};
    }
  }
  return derived;
}

bool self_check() {
  if (derive_targets() != kColumnTargets)
    throw std::logic_error("column transition table fails its derivation");
  return true;
}

}  // namespace

int column_of(const Nat& c) {
  if (c.is_zero()) throw std::domain_error("column_of: value must be >= 1");
  return normalize_column(c.mod_u64(12));
}

const std::vector<int>& column_step_targets(int column) {
  static const bool checked = self_check();
  (void)checked;
  if (column < 1 || column > 12)
    throw std::domain_error("column_step_targets: column must be 1..12");
  return kColumnTargets[column - 1];
}

std::vector<ColumnStep> column_trace(const Nat& c, std::uint64_t max_steps) {
  if (c.is_zero()) throw std::domain_error("column_trace: value must be >= 1");
  std::vector<ColumnStep> out;
  Nat cur = c;
  const Nat one(1);
  for (std::uint64_t i = 0;; ++i) {
    int col = column_of(cur);
    Nat row = (cur - col).divmod_u64(12).first;
    out.push_back(ColumnStep{cur, std::move(row), col});
    if (cur == one || i == max_steps) break;
    cur = collatz_step(cur);
  }
  return out;
}

}  // namespace collatz
