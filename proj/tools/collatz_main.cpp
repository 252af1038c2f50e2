// Command-line front end for the collatz-forms library.
//
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 limit
// exceeded, 4 I/O or checkpoint mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "collatz/analyze.hpp"
#include "collatz/cascades.hpp"
#include "collatz/columns.hpp"
#include "collatz/expr.hpp"
#include "collatz/scan.hpp"
#include "collatz/sequence.hpp"
#include "collatz/stopping_forms.hpp"
#include "collatz/tables.hpp"

namespace {

using namespace collatz;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kParseError = 2;
constexpr int kLimitExceeded = 3;
constexpr int kIoError = 4;

Nat positive_expr(const std::string& text) {
  Nat v = eval_expr(text);
  if (v.is_zero()) throw std::domain_error("value must be >= 1");
  return v;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

int cmd_analyze(const std::string& expr, bool as_json) {
  AnalyzeReport r = analyze(positive_expr(expr));
  if (as_json) {
    std::cout << analyze_json(r).dump(2) << '\n';
  } else {
    std::cout << analyze_text(r);
  }
  return kOk;
}

int cmd_cascade(const std::string& expr) {
  std::cout << render_cascade(run_cascade(positive_expr(expr)));
  return kOk;
}

int cmd_ladder(const std::string& expr, bool primary) {
  Nat v = positive_expr(expr);
  if (!primary) {
    std::cout << render_ladder(mcs(v));
    return kOk;
  }
  auto res = pmcs(v);  // rejects multiples of 3
  if (!res) {
    std::cerr << "no odd multiple of 3 reached within the ladder limit\n";
    return kLimitExceeded;
  }
  std::cout << render_pmcs_chain(*res);
  return kOk;
}

int cmd_columns(const std::string& expr, std::uint64_t steps) {
  std::cout << render_column_trace(column_trace(positive_expr(expr), steps));
  return kOk;
}

int cmd_stoptime(const std::string& expr, std::uint64_t limit, bool total) {
  Nat v = positive_expr(expr);
  auto stop = stopping_time(v, limit);
  if (!stop) {
    std::cerr << "no iterate below the start within " << limit << " steps\n";
    return kLimitExceeded;
  }
  std::cout << "S=" << stop->stopping_time << " E=" << stop->even_steps
            << " final=" << stop->final_value.to_decimal() << '\n';
  if (total) {
    auto t = total_stopping_time(v);
    if (!t) {
      std::cerr << "1 not reached within " << kDefaultTotalStoppingLimit
                << " steps\n";
      return kLimitExceeded;
    }
    std::cout << "total=" << *t << '\n';
  }
  return kOk;
}

int cmd_seeds(std::uint64_t count) {
  for (const Nat& k : seeds(count)) std::cout << k.to_decimal() << '\n';
  return kOk;
}

int cmd_form(const std::string& spec) {
  SymbolicForm form = expand_dotted(parse_dotted(spec));
  std::cout << "form: " << form.str() << '\n';
  FormClass cls = classify_form(form);
  std::cout << "class: " << (cls.mix ? "mix, minimum base " : "fixed base ")
            << cls.base.to_decimal() << '\n';
  if (!cls.mix && cls.base > Nat(2)) {
    SymbolicForm t = symbolic_cascade_transform(form);
    FormClass tcls = classify_form(t);
    std::cout << "cascade transform: " << t.str() << '\n';
    std::cout << "transform class: "
              << (tcls.mix ? "mix, minimum base " : "fixed base ")
              << tcls.base.to_decimal() << '\n';
  }
  return kOk;
}

int cmd_table(int id, bool csv) {
  Table t = make_table(id);
  std::cout << (csv ? render_csv(t) : render_text(t));
  return kOk;
}

struct ScanArgs {
  std::string lo;
  std::string hi;
  std::uint64_t window = 10'000;
  std::string out_path;
  std::string forms_path;
  std::string checkpoint_path;
  bool resume = false;
  unsigned jobs = 1;
};

int cmd_scan(const ScanArgs& args) {
  ScanOptions opts;
  opts.lo = positive_expr(args.lo);
  opts.hi = positive_expr(args.hi);
  opts.window = args.window;
  opts.jobs = args.jobs;
  opts.checkpoint_path = args.checkpoint_path;
  opts.resume = args.resume;

  ScanResult res = run_scan(opts);

  std::string csv = windows_csv(res.windows);
  if (args.out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(args.out_path, csv);
  }
  if (!args.forms_path.empty()) write_file(args.forms_path, forms_csv(res.forms));

  ScanStats st = compute_scan_stats(res.windows);
  std::cout << "windows: " << st.window_count << "  forms: " << res.forms.size()
            << "  mean: " << format_double(st.mean)
            << "  stddev(population): " << format_double(st.stddev_population)
            << "  stddev(sample): " << format_double(st.stddev_sample)
            << "  max: " << st.max << "  min: " << st.min << '\n';
  if (!res.unresolved.empty()) {
    std::cout << "unresolved (stopping time above step cap): "
              << res.unresolved.size() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collatz-forms: form-based analysis of Collatz sequences"};
  app.require_subcommand(1);

  std::string expr;
  bool json_flag = false;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Full analysis of a number");
  analyze_cmd->add_option("expr", expr, "number or expression, e.g. 10^142-10^6+1")
      ->required();
  analyze_cmd->add_flag("--json", json_flag, "machine-readable output");

  auto* cascade_cmd = app.add_subcommand("cascade", "Run and print a cascade");
  cascade_cmd->add_option("expr", expr)->required();

  bool primary = false;
  auto* ladder_cmd =
      app.add_subcommand("ladder", "Reverse cascade to the maximum cascade start");
  ladder_cmd->add_option("expr", expr)->required();
  ladder_cmd->add_flag("--primary", primary,
                       "iterate ladders to the primary maximum cascade start");

  std::uint64_t steps = 10'000;
  auto* columns_cmd =
      app.add_subcommand("columns", "Column-annotated sequence trace");
  columns_cmd->add_option("expr", expr)->required();
  columns_cmd->add_option("--steps", steps, "maximum steps to trace");

  std::uint64_t stop_limit = kDefaultStoppingLimit;
  bool with_total = false;
  auto* stoptime_cmd =
      app.add_subcommand("stoptime", "Stopping time and even-step count");
  stoptime_cmd->add_option("expr", expr)->required();
  stoptime_cmd->add_option("--limit", stop_limit, "step limit");
  stoptime_cmd->add_flag("--total", with_total, "also print the total stopping time");

  std::uint64_t seed_count = 0;
  auto* seeds_cmd = app.add_subcommand("seeds", "List seeds");
  seeds_cmd->add_option("--count", seed_count, "how many seeds")->required();

  std::string form_spec;
  auto* form_cmd =
      app.add_subcommand("form", "Expand and classify a dotted composite form");
  form_cmd->add_option("spec", form_spec, "dotted notation, e.g. 16.4.8")
      ->required();

  int table_id = 0;
  bool csv_flag = false;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a reference table");
  table_cmd->add_option("id", table_id, "table id")->required();
  table_cmd->add_flag("--csv", csv_flag, "CSV instead of aligned text");

  ScanArgs scan_args;
  auto* scan_cmd =
      app.add_subcommand("scan", "Scan a range for principal forms");
  scan_cmd->add_option("lo", scan_args.lo)->required();
  scan_cmd->add_option("hi", scan_args.hi)->required();
  scan_cmd->add_option("--window", scan_args.window, "window size");
  scan_cmd->add_option("--out", scan_args.out_path, "window CSV path");
  scan_cmd->add_option("--forms", scan_args.forms_path, "principal-form CSV path");
  scan_cmd->add_option("--checkpoint", scan_args.checkpoint_path,
                       "checkpoint file path");
  scan_cmd->add_flag("--resume", scan_args.resume,
                     "skip windows already in the checkpoint");
  scan_cmd->add_option("--jobs", scan_args.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(expr, json_flag);
    if (cascade_cmd->parsed()) return cmd_cascade(expr);
    if (ladder_cmd->parsed()) return cmd_ladder(expr, primary);
    if (columns_cmd->parsed()) return cmd_columns(expr, steps);
    if (stoptime_cmd->parsed()) return cmd_stoptime(expr, stop_limit, with_total);
    if (seeds_cmd->parsed()) return cmd_seeds(seed_count);
    if (form_cmd->parsed()) return cmd_form(form_spec);
    if (table_cmd->parsed()) return cmd_table(table_id, csv_flag);
    if (scan_cmd->parsed()) return cmd_scan(scan_args);
    return kParseError;
  } catch (const ExprError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const CheckpointMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
}
