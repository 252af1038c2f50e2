#pragma once

/// Stopping-time analysis of composite forms.
///
/// A composite form 2^p*n + f steps through the Collatz rules as a unit
/// while its coefficient stays even: the parity of every member is the
/// parity of the offset. The form stops when its offset first drops
/// below the starting offset (the coefficient is then strictly smaller
/// too, so every member's value has dropped); it goes indeterminate when
/// the coefficient turns odd first.
///
/// A form stops exactly when the power of 2 in its base is at least E,
/// the number of halvings in the offset's own sequence through its
/// stopping time S. E is pinned down by S alone: 3^S < 6^E <= 2*3^S.
/// An offset f smaller than its minimum base 2^E heads a form covering
/// no number below f; such offsets are the principal offsets.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "collatz/forms.hpp"
#include "collatz/nat.hpp"
#include "collatz/sequence.hpp"

namespace collatz {

enum class Parity { odd, even, indeterminate };

/// odd iff coefficient even and offset odd; even iff both even;
/// indeterminate iff the coefficient is odd.
Parity form_parity(const SymbolicForm& s);

/// One Collatz step applied to every member at once. nullopt when the
/// parity is indeterminate.
std::optional<SymbolicForm> symbolic_step(const SymbolicForm& s);

struct SymbolicStopped {
  std::uint64_t stopping_time = 0;
  std::uint64_t even_steps = 0;
  SymbolicForm final;
};
struct SymbolicIndeterminate {
  std::uint64_t step = 0;
  SymbolicForm form;
};
struct SymbolicLimitReached {
  std::uint64_t steps = 0;
  SymbolicForm form;
};
using SymbolicOutcome =
    std::variant<SymbolicStopped, SymbolicIndeterminate, SymbolicLimitReached>;

inline constexpr std::uint64_t kSymbolicStepLimit = 10'000;

/// Iterates symbolic_step on a composite form (power-of-2 coefficient).
SymbolicOutcome symbolic_stopping_time(
    const SymbolicForm& s, std::uint64_t limit = kSymbolicStepLimit);

/// The unique E with 3^S < 6^E <= 2*3^S, if any. Exact arithmetic; the
/// right bound is closed so that S=1 (a lone halving) admits E=1.
std::optional<std::uint64_t> even_steps_for_stopping(std::uint64_t s);

/// even_steps_for_stopping for every S in [1, max_s], computed
/// incrementally; index i holds the value for S = i + 1.
std::vector<std::optional<std::uint64_t>> even_steps_table(std::uint64_t max_s);

/// All S <= max_s that are the stopping time of some sequence.
std::vector<std::uint64_t> admissible_stopping_times(std::uint64_t max_s);

struct MinBase {
  Nat base;  // 2^even_steps
  std::uint64_t stopping_time = 0;
  std::uint64_t even_steps = 0;
};

/// Minimum power-of-2 base giving the form of offset f a stopping time;
/// certified by running the symbolic sequence of 2^E*n + f. Requires
/// f >= 2. nullopt when f's stopping time exceeds max_steps.
std::optional<MinBase> min_base_for_offset(
    const Nat& f, std::uint64_t max_steps = kDefaultStoppingLimit);

/// True iff c < 2^E(c): c is the smallest member of its residue class
/// mod its minimum base. Requires c >= 2. nullopt when c's stopping
/// time exceeds max_steps.
std::optional<bool> is_principal(
    const Nat& c, std::uint64_t max_steps = kDefaultStoppingLimit);

struct PrincipalForm {
  Nat offset;  // < base
  std::uint64_t even_steps = 0;
  Nat base;  // 2^even_steps
  std::uint64_t stopping_time = 0;
};

struct ScanWindowStats {
  Nat window_start;
  Nat window_end;
  std::uint64_t principal_count = 0;
};

struct WindowScan {
  Nat window_start;
  Nat window_end;
  std::vector<PrincipalForm> forms;
  std::vector<Nat> unresolved;  // stopping time not found within the cap
};

struct ScanResult {
  std::vector<PrincipalForm> forms;
  std::vector<ScanWindowStats> windows;
  std::vector<Nat> unresolved;
};

inline constexpr std::uint64_t kScanStepCap = 100'000;

/// Scans one window, restricted to [lo, hi]. Windows are the fixed
/// ranges [k*window + 1, (k+1)*window], so a scan range may cover a
/// window only partially.
WindowScan scan_window(const Nat& window_start, const Nat& window_end,
                       const Nat& lo, const Nat& hi,
                       std::uint64_t step_cap = kScanStepCap);

/// Enumerates the principal forms originating in [lo, hi] with counts
/// per window. Deterministic for any partitioning of the range.
ScanResult scan_principal_forms(const Nat& lo, const Nat& hi,
                                std::uint64_t window = 10'000,
                                std::uint64_t step_cap = kScanStepCap);

/// "2*n", "4*n+1", "2^59*n+27" — powers beyond 2^10 print as powers.
std::string principal_form_str(const PrincipalForm& f);

}  // namespace collatz
