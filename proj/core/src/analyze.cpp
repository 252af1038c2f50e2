#include "collatz/analyze.hpp"

#include "collatz/stopping_forms.hpp"

namespace collatz {

namespace {
using nlohmann::json;
}

AnalyzeReport analyze(const Nat& value) {
  if (value.is_zero()) throw std::domain_error("analyze: value must be >= 1");
  AnalyzeReport r;
  r.value = value;
  r.form = decompose(value);
  r.base = Nat::pow2(r.form.p);
  r.column = column_of(value);
  r.seed = is_seed(value);

  if (value == Nat(1)) {
    r.stop_notice = "1 has no stopping time (1 -> 4 -> 2 -> 1)";
  } else {
    r.stop = stopping_time(value);
    if (!r.stop) {
      r.stop_notice = "no iterate below the start within " +
                      std::to_string(kDefaultStoppingLimit) + " steps";
    } else {
      r.principal = value < Nat::pow2(r.stop->even_steps);
    }
  }

  r.mcs_trace = mcs(value);

  if (value.mod_u64(3) == 0) {
    r.pmcs_notice = "multiples of 3 cannot result from a cascade";
  } else {
    r.pmcs_result = pmcs(value);
    if (!r.pmcs_result)
      r.pmcs_notice = "no odd multiple of 3 reached within 1000 ladders";
  }
  return r;
}

std::string analyze_text(const AnalyzeReport& r) {
  std::string out;
  out += "value:         " + r.value.to_decimal() + "\n";
  out += "standard form: " + standard_form_str(r.value) + "   (p=" +
         std::to_string(r.form.p) + ", n=" + r.form.n.to_decimal() + ")\n";
  out += "standard base: " + r.base.to_decimal() + "\n";
  out += "column:        " + std::to_string(r.column) + "\n";
  out += "seed:          " + std::string(r.seed ? "yes" : "no") + "\n";
  if (r.stop) {
    out += "stopping time: S=" + std::to_string(r.stop->stopping_time) +
           " E=" + std::to_string(r.stop->even_steps) +
           " final=" + r.stop->final_value.to_decimal() + "\n";
  } else {
    out += "stopping time: " + r.stop_notice + "\n";
  }
  if (r.principal) {
    out += "principal:     " + std::string(*r.principal ? "yes" : "no");
    if (r.stop)
      out += " (minimum base 2^" + std::to_string(r.stop->even_steps) + ")";
    out += "\n";
  } else {
    out += "principal:     n/a\n";
  }
  out += "mcs:           " + r.mcs_trace.mcs.to_decimal() + " = " +
         standard_form_str(r.mcs_trace.mcs) + "\n";
  if (r.pmcs_result) {
    out += "pmcs:          " + r.pmcs_result->value.to_decimal() + " = " +
           standard_form_str(r.pmcs_result->value) + "\n";
  } else {
    out += "pmcs:          " + r.pmcs_notice + "\n";
  }
  return out;
}

json analyze_json(const AnalyzeReport& r) {
  json j;
  j["value"] = r.value.to_decimal();
  j["form"] = {{"p", r.form.p}, {"n", r.form.n.to_decimal()}};
  j["base"] = r.base.to_decimal();
  j["column"] = r.column;
  j["seed"] = r.seed;
  if (r.stop) {
    j["stopping"] = {{"S", r.stop->stopping_time},
                     {"E", r.stop->even_steps},
                     {"final", r.stop->final_value.to_decimal()}};
    j["stopping_notice"] = nullptr;
  } else {
    j["stopping"] = nullptr;
    j["stopping_notice"] = r.stop_notice;
  }
  if (r.principal) {
    j["principal"] = *r.principal;
  } else {
    j["principal"] = nullptr;
  }
  json rungs = json::array();
  for (const auto& rung : r.mcs_trace.rungs) rungs.push_back(rung.to_decimal());
  j["mcs"] = {{"value", r.mcs_trace.mcs.to_decimal()},
              {"rungs", std::move(rungs)}};
  if (r.pmcs_result) {
    json chain = json::array();
    for (const auto& v : r.pmcs_result->chain) chain.push_back(v.to_decimal());
    j["pmcs"] = {{"value", r.pmcs_result->value.to_decimal()},
                 {"chain", std::move(chain)}};
    j["pmcs_notice"] = nullptr;
  } else {
    j["pmcs"] = nullptr;
    j["pmcs_notice"] = r.pmcs_notice;
  }
  return j;
}

std::string render_cascade(const CascadeTrace& trace) {
  std::string out =
      trace.start.to_decimal() + "=" + standard_form_str(trace.start) + "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Nat& v = trace.steps[i].first;
    out += v.to_decimal() + "=" + standard_form_str(v);
    if (i + 1 == trace.steps.size()) out += " (end of cascade)";
    out += '\n';
  }
  return out;
}

std::string render_ladder(const LadderTrace& ladder) {
  std::string out;
  for (std::size_t i = 0; i < ladder.rungs.size(); ++i) {
    const Nat& v = ladder.rungs[i];
    out += v.to_decimal() + "=" + standard_form_str(v);
    if (i + 1 == ladder.rungs.size()) out += " (maximum cascade start)";
    out += '\n';
  }
  return out;
}

std::string render_pmcs_chain(const PmcsResult& res) {
  std::string out;
  for (std::size_t i = 0; i < res.chain.size(); ++i) {
    const Nat& v = res.chain[i];
    out += v.to_decimal() + "=" + standard_form_str(v);
    if (i + 1 == res.chain.size()) out += " (primary maximum cascade start)";
    out += '\n';
  }
  return out;
}

std::string render_column_trace(const std::vector<ColumnStep>& steps) {
  std::string out = "step  value  standard form  column form  column\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    out += std::to_string(i) + "  " + s.value.to_decimal() + "  " +
           standard_form_str(s.value) + "  " +
           form_notation(Nat(12), s.row, Nat(static_cast<std::uint64_t>(s.column))) +
           "  " + std::to_string(s.column) + '\n';
  }
  return out;
}

}  // namespace collatz
