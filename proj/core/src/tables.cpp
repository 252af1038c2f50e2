#include "collatz/tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "collatz/cascades.hpp"
#include "collatz/columns.hpp"
#include "collatz/forms.hpp"
#include "collatz/stopping_forms.hpp"

namespace collatz {

namespace {
using u64 = std::uint64_t;

std::string symbolic_str(const Nat& k, const Nat& f) {
  return SymbolicForm{k, f}.str();
}

/// "v = base(index)+offset" with the transform-style mixed base 3^(p-1).
std::string mixed_transform_str(const Nat& v) {
  FormDescriptor d = decompose(mcs(v).mcs);
  Nat base3 = Nat::pow(Nat(3), d.p - 1);
  Nat offset = (base3 - 1) >> 1;
  return v.to_decimal() + " = " + form_notation(base3, d.n, offset);
}

Table table_standard_forms() {
  Table t{1, "Standard Number Forms",
          {"p", "Base", "Offset", "Standard Form"},
          {},
          {}};
  for (u64 p = 1; p <= 5; ++p) {
    Nat base = Nat::pow2(p);
    Nat offset = Nat::pow2(p - 1) - 1;
    t.rows.push_back({std::to_string(p), base.to_decimal(),
                      offset.to_decimal(), symbolic_str(base, offset)});
  }
  return t;
}

Table table_cascade_transforms() {
  Table t{3, "Cascade Transforms",
          {"p", "Base", "Standard Form", "Transform"},
          {},
          {}};
  for (u64 p = 1; p <= 7; ++p) {
    Nat base = Nat::pow2(p);
    Nat offset = Nat::pow2(p - 1) - 1;
    Nat k3 = Nat::pow(Nat(3), p - 1);
    Nat f3 = (k3 - 1) >> 1;
    t.rows.push_back({std::to_string(p), base.to_decimal(),
                      symbolic_str(base, offset), symbolic_str(k3, f3)});
  }
  return t;
}

Table table_8cascade_transforms() {
  Table t{4, "Forms of 8-Cascade Transforms",
          {"Index n", "Input 8n+3", "Transform 9n+4",
           "Standard Form of Transform", "Standard Base of Transform"},
          {},
          {}};
  for (u64 n = 0; n <= 17; ++n) {
    Nat input = reconstruct(3, Nat(n));
    Nat transform = cascade_transform(3, Nat(n));
    t.rows.push_back({std::to_string(n), input.to_decimal(),
                      transform.to_decimal(), standard_form_str(transform),
                      standard_base(transform).to_decimal()});
  }
  return t;
}

Table table_mcs_values() {
  Table t{8, "Maximum Cascade Starts for Some Small Numbers",
          {"Cascade Ending Value (Mixed Form)",
           "Maximum Cascade Starting Value", "Standard Base"},
          {},
          {}};
  for (u64 v = 28; v <= 43; ++v) {
    Nat value(v);
    Nat m = mcs(value).mcs;
    t.rows.push_back({mixed_transform_str(value),
                      m.to_decimal() + " = " + standard_form_str(m),
                      standard_base(m).to_decimal()});
  }
  return t;
}

Table table_pmcs_values() {
  Table t{9, "Primary Maximum Cascade Starts for Some Small Numbers",
          {"Cascade Ending Value (Mixed Form)",
           "Primary Maximum Cascade Starting Value", "Standard Base"},
          {},
          {"Multiples of 3 cannot result from an odd cascade."}};
  for (u64 v = 28; v <= 43; ++v) {
    Nat value(v);
    if (value.mod_u64(3) == 0) {
      t.rows.push_back({mixed_transform_str(value), "see note", "see note"});
      continue;
    }
    auto res = pmcs(value);
    if (!res) throw std::logic_error("pmcs did not terminate for small value");
    const Nat& m = res->value;
    t.rows.push_back({mixed_transform_str(value),
                      m.to_decimal() + " = " + standard_form_str(m),
                      standard_base(m).to_decimal()});
  }
  return t;
}

Table table_seeds() {
  Table t{10, "Seeds (Small Values)", {"Seed", "Power of 2 Reached"}, {}, {}};
  for (const Nat& k : seeds(5)) {
    Nat power = k * 3 + 1;
    t.rows.push_back({k.to_decimal(), power.to_decimal() + " = 2^" +
                                          std::to_string(power.trailing_zeros())});
  }
  return t;
}

Table table_column_steps() {
  Table t{11, "Column Analysis of Collatz Steps",
          {"Column", "Std or Non-Std Form", "Column Form Before Step",
           "Mixed Column Form After Step", "Resulting Column"},
          {},
          {}};
  for (int col = 1; col <= 12; ++col) {
    std::string kind =
        col % 2 == 0 ? "2n" : (col % 4 == 1 ? "4n+1" : "4n+3");
    std::string before = "12r+" + std::to_string(col);
    std::string after = col % 2 == 1
                            ? "36r+" + std::to_string(3 * col + 1)
                            : "6r+" + std::to_string(col / 2);
    const auto& targets = column_step_targets(col);
    std::string result;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (i) result += " or ";
      result += std::to_string(targets[i]);
    }
    t.rows.push_back({std::to_string(col), kind, before, after, result});
  }
  return t;
}

Table table_even_steps() {
  Table t{17, "Even Steps Required to Stopping Time",
          {"Stopping Time S", "Even Steps Required E", "Minimum Base 2^E"},
          {},
          {}};
  auto table = even_steps_table(26);
  for (u64 s = 1; s <= 26; ++s) {
    auto e = table[s - 1];
    if (!e) continue;
    std::string base = Nat::pow2(*e).to_decimal();
    if (s == 21) {
      base += " *";
      t.footnotes.push_back(
          "* corrected: 2^13 = 8192 (sometimes misprinted as 18192)");
    }
    t.rows.push_back({std::to_string(s), std::to_string(*e), base});
  }
  return t;
}

Table table_principal_forms() {
  Table t{18, "Principal Forms (required to describe all numbers up to 100)",
          {"Form", "Offset", "E", "Stopping Time S"},
          {},
          {}};
  ScanResult res = scan_principal_forms(Nat(1), Nat(100));
  std::sort(res.forms.begin(), res.forms.end(),
            [](const PrincipalForm& a, const PrincipalForm& b) {
              return a.offset < b.offset;
            });
  for (const auto& f : res.forms) {
    t.rows.push_back({principal_form_str(f), f.offset.to_decimal(),
                      std::to_string(f.even_steps),
                      std::to_string(f.stopping_time)});
  }
  return t;
}

// Levels of cascade-result classification. A row is a dotted composite
// form; each column extends it by one more component and classifies the
// standard bases of the cascade results of the extended family. Rows of
// the next level extend each row by the component at which Mix occurred.
const std::vector<Nat>& level_columns() {
  static const std::vector<Nat> cols = {Nat(2),  Nat(4),  Nat(8), Nat(16),
                                        Nat(32), Nat(64), Nat(128)};
  return cols;
}

std::string dotted_label(const std::vector<Nat>& comps) {
  std::string label;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) label += '.';
    label += comps[i].to_decimal();
  }
  return label;
}

FormClass cascade_result_class(const std::vector<Nat>& comps) {
  return classify_form(symbolic_cascade_transform(expand_dotted(comps)));
}

std::vector<std::vector<Nat>> level_one_rows() {
  std::vector<std::vector<Nat>> rows;
  for (u64 p = 2; p <= 21; ++p) rows.push_back({Nat::pow2(p)});
  return rows;
}

std::vector<std::vector<Nat>> next_level_rows(
    const std::vector<std::vector<Nat>>& rows) {
  std::vector<std::vector<Nat>> next;
  for (const auto& comps : rows) {
    std::vector<Nat> extended;
    for (const Nat& b : level_columns()) {
      auto with_b = comps;
      with_b.push_back(b);
      if (cascade_result_class(with_b).mix) {
        extended = std::move(with_b);
        break;
      }
    }
    if (extended.empty())
      throw std::logic_error("cascade-result row has no Mix column");
    next.push_back(std::move(extended));
  }
  return next;
}

Table table_cascade_results(int level) {
  Table t{19 + level,
          "Standard Forms of Cascade Results - Level " + std::to_string(level),
          {"Form", ".2", ".4", ".8", ".16", ".32", ".64", ".128", "Mix"},
          {},
          {}};
  auto rows = level_one_rows();
  for (int l = 1; l < level; ++l) rows = next_level_rows(rows);
  for (const auto& comps : rows) {
    std::vector<std::string> cells{dotted_label(comps)};
    std::string mix_base;
    for (const Nat& b : level_columns()) {
      auto with_b = comps;
      with_b.push_back(b);
      FormClass cls = cascade_result_class(with_b);
      if (cls.mix) {
        cells.push_back("Mix");
        mix_base = cls.base.to_decimal() + "+";
      } else {
        cells.push_back(cls.base.to_decimal());
      }
    }
    if (mix_base.empty())
      throw std::logic_error("cascade-result row has no Mix column");
    cells.push_back(mix_base);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace

const std::vector<int>& known_table_ids() {
  static const std::vector<int> ids = {1, 3, 4, 8, 9, 10, 11, 17, 18, 20, 21, 22};
  return ids;
}

Table make_table(int id) {
  switch (id) {
    case 1: return table_standard_forms();
    case 3: return table_cascade_transforms();
    case 4: return table_8cascade_transforms();
    case 8: return table_mcs_values();
    case 9: return table_pmcs_values();
    case 10: return table_seeds();
    case 11: return table_column_steps();
    case 17: return table_even_steps();
    case 18: return table_principal_forms();
    case 20: return table_cascade_results(1);
    case 21: return table_cascade_results(2);
    case 22: return table_cascade_results(3);
    default:
      throw std::out_of_range("unknown table id: " + std::to_string(id));
  }
}

std::string render_text(const Table& t) {
  std::vector<std::size_t> widths(t.headers.size(), 0);
  for (std::size_t i = 0; i < t.headers.size(); ++i)
    widths[i] = t.headers[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());

  auto emit_row = [&](const std::vector<std::string>& row, std::string& out) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += row[i];
      if (i + 1 < row.size()) out.append(widths[i] - row[i].size(), ' ');
    }
    out += '\n';
  };

  std::string out = t.title + "\n";
  emit_row(t.headers, out);
  std::size_t total = 0;
  for (std::size_t w : widths) total += w;
  out.append(total + 2 * (widths.size() - 1), '-');
  out += '\n';
  for (const auto& row : t.rows) emit_row(row, out);
  for (const auto& note : t.footnotes) out += note + '\n';
  return out;
}

std::string render_csv(const Table& t) {
  auto emit_row = [](const std::vector<std::string>& row, std::string& out) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  std::string out;
  emit_row(t.headers, out);
  for (const auto& row : t.rows) emit_row(row, out);
  return out;
}

}  // namespace collatz
