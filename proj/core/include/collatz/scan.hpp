#pragma once

/// Range-scan driver: window-parallel principal-form scanning with
/// line-delimited checkpoints and CSV emission.
///
/// Windows are independent units of work, so the merged result is
/// identical for any job count. Checkpoint records are written by a
/// single writer in ascending window order as the completed prefix
/// grows; resuming replays them idempotently after an exact header
/// match.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "collatz/nat.hpp"
#include "collatz/stopping_forms.hpp"

namespace collatz {

struct CheckpointMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScanOptions {
  Nat lo;
  Nat hi;
  std::uint64_t window = 10'000;
  std::uint64_t step_cap = kScanStepCap;
  unsigned jobs = 1;
  std::string checkpoint_path;  // empty: no checkpointing
  bool resume = false;
};

ScanResult run_scan(const ScanOptions& opts);

struct ScanStats {
  std::uint64_t window_count = 0;
  double mean = 0.0;
  double stddev_population = 0.0;
  double stddev_sample = 0.0;
  std::uint64_t max = 0;
  std::uint64_t min = 0;
};

ScanStats compute_scan_stats(const std::vector<ScanWindowStats>& windows);

/// "window_start,window_end,principal_count" rows, windows ascending.
std::string windows_csv(const std::vector<ScanWindowStats>& windows);

/// "offset,E,stopping_time" rows; the base is implied as 2^E.
std::string forms_csv(const std::vector<PrincipalForm>& forms);

}  // namespace collatz
