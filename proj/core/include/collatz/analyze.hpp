#pragma once

/// Whole-number analysis report and the trace renderings used by the
/// CLI. Values in JSON output that can exceed 64 bits are decimal
/// strings; the key set is identical for every input.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "collatz/cascades.hpp"
#include "collatz/columns.hpp"
#include "collatz/forms.hpp"
#include "collatz/nat.hpp"
#include "collatz/sequence.hpp"

namespace collatz {

struct AnalyzeReport {
  Nat value;
  FormDescriptor form;
  Nat base;
  int column = 0;
  bool seed = false;
  std::optional<StopResult> stop;
  std::string stop_notice;  // set when stop is absent
  std::optional<bool> principal;
  LadderTrace mcs_trace;
  std::optional<PmcsResult> pmcs_result;
  std::string pmcs_notice;  // set when pmcs_result is absent
};

AnalyzeReport analyze(const Nat& value);

std::string analyze_text(const AnalyzeReport& r);
nlohmann::json analyze_json(const AnalyzeReport& r);

/// Table-7 style check list: one "value=form" line per cascade value,
/// the last marked "(end of cascade)".
std::string render_cascade(const CascadeTrace& trace);

/// One "value=form" line per rung, the last marked as the maximum
/// cascade start.
std::string render_ladder(const LadderTrace& ladder);

/// Chain of successive maximum cascade starts down to the primary one.
std::string render_pmcs_chain(const PmcsResult& res);

/// Step table: step, value, standard form, column form, column.
std::string render_column_trace(const std::vector<ColumnStep>& steps);

}  // namespace collatz
