#include "collatz/stopping_forms.hpp"

#include <stdexcept>

namespace collatz {

namespace {
using u64 = std::uint64_t;

// 1 and 2 are the smallest members of their groups but sit below the
// c >= 2 domain of stopping_time: the 4n+1 family stops in 3 steps (2 of
// them halvings) for every index n >= 1, with 1 itself the trivial n=0
// member; the 2n family stops in a single halving. The scanner emits
// those two family rows when it passes 1 and 2.
PrincipalForm group_of_one() { return PrincipalForm{Nat(1), 2, Nat(4), 3}; }
PrincipalForm group_of_two() { return PrincipalForm{Nat(0), 1, Nat(2), 1}; }
}  // namespace

Parity form_parity(const SymbolicForm& s) {
  if (s.k.is_zero())
    throw std::domain_error("form_parity: coefficient must be >= 1");
  if (s.k.is_odd()) return Parity::indeterminate;
  return s.f.is_odd() ? Parity::odd : Parity::even;
}

std::optional<SymbolicForm> symbolic_step(const SymbolicForm& s) {
  switch (form_parity(s)) {
    case Parity::indeterminate:
      return std::nullopt;
    case Parity::odd:
      return SymbolicForm{s.k * 3, s.f * 3 + 1};
    case Parity::even:
      return SymbolicForm{s.k >> 1, s.f >> 1};
  }
  return std::nullopt;  // unreachable
}

SymbolicOutcome symbolic_stopping_time(const SymbolicForm& s, u64 limit) {
  if (!s.k.is_power_of_two())
    throw std::domain_error(
        "symbolic_stopping_time: coefficient must be a power of 2");
  SymbolicForm cur = s;
  u64 steps = 0;
  u64 evens = 0;
  if (cur.k.is_odd()) return SymbolicIndeterminate{0, cur};  // k == 1
  while (steps < limit) {
    const bool even_step = cur.f.is_even();
    cur = *symbolic_step(cur);
    ++steps;
    if (even_step) ++evens;
    if (cur.f < s.f) {
      if (!(cur.k < s.k))
        throw std::logic_error(
            "symbolic_stopping_time: offset dropped without coefficient drop");
      return SymbolicStopped{steps, evens, std::move(cur)};
    }
    if (cur.k.is_odd()) return SymbolicIndeterminate{steps, std::move(cur)};
  }
  return SymbolicLimitReached{steps, std::move(cur)};
}

std::optional<u64> even_steps_for_stopping(u64 s) {
  if (s == 0) return std::nullopt;
  const Nat p3 = Nat::pow(Nat(3), s);
  // smallest E with 6^E > 3^S
  Nat p6(1);
  u64 e = 0;
  while (p6 <= p3) {
    p6 *= 6;
    ++e;
  }
  if (p6 <= p3 * 2) return e;
  return std::nullopt;
}

std::vector<std::optional<u64>> even_steps_table(u64 max_s) {
  std::vector<std::optional<u64>> out;
  out.reserve(max_s);
  Nat p3(1);
  Nat p6(1);
  u64 e = 0;
  for (u64 s = 1; s <= max_s; ++s) {
    p3 *= 3;
    while (p6 <= p3) {
      p6 *= 6;
      ++e;
    }
    if (p6 <= p3 * 2) {
      out.emplace_back(e);
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

std::vector<u64> admissible_stopping_times(u64 max_s) {
  std::vector<u64> out;
  auto table = even_steps_table(max_s);
  for (u64 s = 1; s <= max_s; ++s) {
    if (table[s - 1]) out.push_back(s);
  }
  return out;
}

std::optional<MinBase> min_base_for_offset(const Nat& f, u64 max_steps) {
  if (f < Nat(2))
    throw std::domain_error("min_base_for_offset: offset must be >= 2");
  auto stop = stopping_time(f, max_steps);
  if (!stop) return std::nullopt;
  MinBase mb{Nat::pow2(stop->even_steps), stop->stopping_time,
             stop->even_steps};
  auto cert = symbolic_stopping_time(SymbolicForm{mb.base, f});
  const auto* stopped = std::get_if<SymbolicStopped>(&cert);
  if (stopped == nullptr || stopped->stopping_time != mb.stopping_time)
    throw std::logic_error(
        "min_base_for_offset: symbolic certification failed");
  return mb;
}

std::optional<bool> is_principal(const Nat& c, u64 max_steps) {
  if (c < Nat(2)) throw std::domain_error("is_principal: value must be >= 2");
  auto stop = stopping_time(c, max_steps);
  if (!stop) return std::nullopt;
  return c < Nat::pow2(stop->even_steps);
}

WindowScan scan_window(const Nat& window_start, const Nat& window_end,
                       const Nat& lo, const Nat& hi, u64 step_cap) {
  WindowScan ws;
  ws.window_start = window_start;
  ws.window_end = window_end;
  Nat c = std::max(window_start, lo);
  const Nat last = std::min(window_end, hi);
  const Nat one(1);
  const Nat two(2);
  for (; c <= last; c += 1) {
    if (c == one) {
      ws.forms.push_back(group_of_one());
      continue;
    }
    if (c == two) {
      ws.forms.push_back(group_of_two());
      continue;
    }
    auto stop = stopping_time(c, step_cap);
    if (!stop) {
      ws.unresolved.push_back(c);
      continue;
    }
    Nat base = Nat::pow2(stop->even_steps);
    if (c < base) {
      ws.forms.push_back(
          PrincipalForm{c, stop->even_steps, std::move(base),
                        stop->stopping_time});
    }
  }
  return ws;
}

ScanResult scan_principal_forms(const Nat& lo, const Nat& hi, u64 window,
                                u64 step_cap) {
  if (lo.is_zero()) throw std::domain_error("scan: range must start at >= 1");
  if (hi < lo) throw std::domain_error("scan: lo must not exceed hi");
  if (window == 0) throw std::domain_error("scan: window must be >= 1");
  ScanResult out;
  Nat k = (lo - 1).divmod_u64(window).first;
  Nat win_start = k * window + 1;
  while (win_start <= hi) {
    Nat win_end = win_start + (window - 1);
    WindowScan ws = scan_window(win_start, win_end, lo, hi, step_cap);
    out.windows.push_back(ScanWindowStats{
        ws.window_start, ws.window_end,
        static_cast<u64>(ws.forms.size())});
    for (auto& f : ws.forms) out.forms.push_back(std::move(f));
    for (auto& u : ws.unresolved) out.unresolved.push_back(std::move(u));
    win_start = std::move(win_end);
    win_start += 1;
  }
  return out;
}

std::string principal_form_str(const PrincipalForm& f) {
  std::string out;
  if (f.even_steps <= 10) {
    out = f.base.to_decimal();
  } else {
    out = "2^" + std::to_string(f.even_steps);
  }
  out += "*n";
  if (!f.offset.is_zero()) {
    out += '+';
    out += f.offset.to_decimal();
  }
  return out;
}

}  // namespace collatz
