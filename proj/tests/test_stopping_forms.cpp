#include <stdexcept>
#include <cmath>

#include "doctest.h"

#include "collatz/stopping_forms.hpp"

using namespace collatz;
using u64 = std::uint64_t;

namespace {

const SymbolicStopped* as_stopped(const SymbolicOutcome& o) {
  return std::get_if<SymbolicStopped>(&o);
}
const SymbolicIndeterminate* as_indeterminate(const SymbolicOutcome& o) {
  return std::get_if<SymbolicIndeterminate>(&o);
}

}  // namespace

TEST_CASE("form parity") {
  CHECK(form_parity({Nat(8), Nat(3)}) == Parity::odd);
  CHECK(form_parity({Nat(24), Nat(10)}) == Parity::even);
  CHECK(form_parity({Nat(9), Nat(4)}) == Parity::indeterminate);
  CHECK(form_parity({Nat(1), Nat(0)}) == Parity::indeterminate);
}

TEST_CASE("symbolic_step") {
  CHECK(symbolic_step({Nat(8), Nat(3)}) == SymbolicForm{Nat(24), Nat(10)});
  CHECK(symbolic_step({Nat(24), Nat(10)}) == SymbolicForm{Nat(12), Nat(5)});
  auto halved = symbolic_step({Nat(2), Nat(0)});
  REQUIRE(halved.has_value());
  CHECK(*halved == SymbolicForm{Nat(1), Nat(0)});
  CHECK_FALSE(symbolic_step(*halved).has_value());
}

TEST_CASE("symbolic_step mirrors every member") {
  std::vector<SymbolicForm> forms = {{Nat(8), Nat(3)},
                                     {Nat(128), Nat(15)},
                                     {Nat(32), Nat(20)},
                                     {Nat(4), Nat(5)}};
  for (const auto& form : forms) {
    auto next = symbolic_step(form);
    REQUIRE(next.has_value());
    for (u64 n = 0; n <= 16; ++n) {
      Nat member = form.k * n + form.f;
      if (member.is_zero()) continue;
      CHECK(collatz_step(member) == next->k * n + next->f);
    }
  }
}

TEST_CASE("symbolic_stopping_time reference forms") {
  auto s128 = symbolic_stopping_time({Nat(128), Nat(15)});
  const auto* stopped = as_stopped(s128);
  REQUIRE(stopped != nullptr);
  CHECK(stopped->stopping_time == 11);
  CHECK(stopped->even_steps == 7);
  CHECK(stopped->final == SymbolicForm{Nat(81), Nat(10)});

  auto s32 = symbolic_stopping_time({Nat(32), Nat(15)});
  const auto* ind32 = as_indeterminate(s32);
  REQUIRE(ind32 != nullptr);
  CHECK(ind32->step == 9);
  CHECK(ind32->form == SymbolicForm{Nat(81), Nat(40)});

  // The 16-form cascade goes indeterminate at 27n+13 after 7 steps.
  auto s16 = symbolic_stopping_time({Nat(16), Nat(7)});
  const auto* ind16 = as_indeterminate(s16);
  REQUIRE(ind16 != nullptr);
  CHECK(ind16->step == 7);
  CHECK(ind16->form == SymbolicForm{Nat(27), Nat(13)});

  auto s16n3 = symbolic_stopping_time({Nat(16), Nat(3)});
  const auto* stopped3 = as_stopped(s16n3);
  REQUIRE(stopped3 != nullptr);
  CHECK(stopped3->stopping_time == 6);
  CHECK(stopped3->final == SymbolicForm{Nat(9), Nat(2)});

  CHECK_THROWS_AS(symbolic_stopping_time({Nat(6), Nat(1)}), std::domain_error);
}

TEST_CASE("standard forms go indeterminate at step 2p-1, at the transform") {
  for (u64 p = 3; p <= 9; ++p) {
    SymbolicForm standard{Nat::pow2(p), Nat::pow2(p - 1) - 1};
    auto outcome = symbolic_stopping_time(standard);
    const auto* ind = as_indeterminate(outcome);
    REQUIRE(ind != nullptr);
    CHECK(ind->step == 2 * p - 1);
    Nat k3 = Nat::pow(Nat(3), p - 1);
    CHECK(ind->form == SymbolicForm{k3, (k3 - 1) >> 1});
  }
}

TEST_CASE("even_steps_for_stopping") {
  CHECK(even_steps_for_stopping(1) == 1);
  CHECK(even_steps_for_stopping(8) == 5);
  CHECK(even_steps_for_stopping(96) == 59);
  CHECK_FALSE(even_steps_for_stopping(2).has_value());
  CHECK_FALSE(even_steps_for_stopping(4).has_value());
  CHECK_FALSE(even_steps_for_stopping(5).has_value());
  CHECK_FALSE(even_steps_for_stopping(7).has_value());
  CHECK_FALSE(even_steps_for_stopping(0).has_value());
}

TEST_CASE("even_steps_table matches the one-shot route") {
  auto table = even_steps_table(300);
  REQUIRE(table.size() == 300);
  for (u64 s = 1; s <= 300; ++s)
    CHECK(table[s - 1] == even_steps_for_stopping(s));
}

TEST_CASE("admissible stopping times up to 26") {
  std::vector<u64> expected = {1, 3, 6, 8, 11, 13, 16, 19, 21, 24, 26};
  CHECK(admissible_stopping_times(26) == expected);
  CHECK(admissible_stopping_times(2) == std::vector<u64>{1});
  CHECK(admissible_stopping_times(0).empty());

  std::vector<u64> bases = {2,   4,    16,   32,   128,  256,
                            1024, 4096, 8192, 32768, 65536};
  auto table = even_steps_table(26);
  std::size_t i = 0;
  for (u64 s : expected) {
    REQUIRE(table[s - 1].has_value());
    CHECK(Nat::pow2(*table[s - 1]) == Nat(bases[i]));
    ++i;
  }
}

TEST_CASE("min_base_for_offset") {
  auto m15 = min_base_for_offset(Nat(15));
  REQUIRE(m15.has_value());
  CHECK(m15->base == Nat(128));
  CHECK(m15->stopping_time == 11);
  CHECK(m15->even_steps == 7);

  auto m3 = min_base_for_offset(Nat(3));
  REQUIRE(m3.has_value());
  CHECK(m3->base == Nat(16));
  CHECK(m3->stopping_time == 6);
  CHECK(m3->even_steps == 4);

  auto m27 = min_base_for_offset(Nat(27));
  REQUIRE(m27.has_value());
  CHECK(m27->base == Nat::pow2(59));
  CHECK(m27->stopping_time == 96);
  CHECK(m27->even_steps == 59);

  CHECK_THROWS_AS(min_base_for_offset(Nat(1)), std::domain_error);
}

TEST_CASE("minimum base certifies, and so does the doubled base") {
  for (u64 f = 3; f <= 2000; ++f) {
    auto mb = min_base_for_offset(Nat(f));
    REQUIRE(mb.has_value());
    auto numeric = stopping_time(Nat(f));
    REQUIRE(numeric.has_value());
    CHECK(mb->stopping_time == numeric->stopping_time);

    auto doubled = symbolic_stopping_time({mb->base * 2, Nat(f)});
    const auto* stopped = as_stopped(doubled);
    REQUIRE_MESSAGE(stopped != nullptr, "f = ", f);
    CHECK(stopped->stopping_time == numeric->stopping_time);
    CHECK(stopped->even_steps == numeric->even_steps);
  }
}

TEST_CASE("members of every first-table form share the form's stopping time") {
  ScanResult res = scan_principal_forms(Nat(1), Nat(100));
  REQUIRE(res.forms.size() == 17);
  for (const auto& form : res.forms) {
    for (u64 n = 1; n <= 20; ++n) {
      auto member = stopping_time(form.base * n + form.offset);
      REQUIRE(member.has_value());
      CHECK(member->stopping_time == form.stopping_time);
      CHECK(member->even_steps == form.even_steps);
    }
  }
}

TEST_CASE("32n+11 and 32n+23 are the only stopping-time-8 offsets below 32") {
  std::vector<u64> with_s8;
  for (u64 f = 2; f < 32; ++f) {
    auto s = stopping_time(Nat(f));
    REQUIRE(s.has_value());
    if (s->stopping_time == 8) with_s8.push_back(f);
  }
  CHECK(with_s8 == std::vector<u64>{11, 23});
}

TEST_CASE("is_principal") {
  CHECK(is_principal(Nat(27)) == true);
  CHECK(is_principal(Nat(41)) == false);
  CHECK(is_principal(Nat(43)) == false);
  CHECK(is_principal(Nat(2)) == false);
  CHECK(is_principal(Nat(3)) == true);
  CHECK_THROWS_AS(is_principal(Nat(1)), std::domain_error);
}

TEST_CASE("scan of 1..100 reproduces the first principal-form table") {
  ScanResult res = scan_principal_forms(Nat(1), Nat(100));
  REQUIRE(res.forms.size() == 17);
  CHECK(res.unresolved.empty());

  // offset -> E, with the 2n and 4n+1 family rows from values 2 and 1.
  struct Expected {
    u64 offset;
    u64 e;
    u64 s;
  };
  std::vector<Expected> expected = {
      {1, 2, 3},   {0, 1, 1},   {3, 4, 6},   {7, 7, 11},  {11, 5, 8},
      {15, 7, 11}, {23, 5, 8},  {27, 59, 96}, {31, 56, 91}, {39, 8, 13},
      {47, 54, 88}, {59, 7, 11}, {63, 54, 88}, {71, 51, 83}, {79, 8, 13},
      {91, 45, 73}, {95, 8, 13}};
  REQUIRE(res.forms.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(res.forms[i].offset == Nat(expected[i].offset));
    CHECK(res.forms[i].even_steps == expected[i].e);
    CHECK(res.forms[i].stopping_time == expected[i].s);
    CHECK(res.forms[i].base == Nat::pow2(expected[i].e));
    CHECK(res.forms[i].offset < res.forms[i].base);
  }

  CHECK(scan_principal_forms(Nat(101), Nat(200)).forms.size() == 10);
  CHECK(scan_principal_forms(Nat(201), Nat(300)).forms.size() == 9);
}

TEST_CASE("scan windows are the fixed 10k ranges") {
  ScanResult res = scan_principal_forms(Nat(1), Nat(30000));
  REQUIRE(res.windows.size() == 3);
  CHECK(res.windows[0].window_start == Nat(1));
  CHECK(res.windows[0].window_end == Nat(10000));
  CHECK(res.windows[2].window_start == Nat(20001));
  CHECK(res.windows[2].window_end == Nat(30000));
  u64 total = 0;
  for (const auto& w : res.windows) total += w.principal_count;
  CHECK(total == res.forms.size());

  // A misaligned range still lands in the enclosing fixed windows.
  ScanResult ragged = scan_principal_forms(Nat(9995), Nat(10005));
  REQUIRE(ragged.windows.size() == 2);
  CHECK(ragged.windows[0].window_start == Nat(1));
  CHECK(ragged.windows[1].window_start == Nat(10001));
}

TEST_CASE("principal_form_str") {
  PrincipalForm evens{Nat(0), 1, Nat(2), 1};
  CHECK(principal_form_str(evens) == "2*n");
  PrincipalForm f27{Nat(27), 59, Nat::pow2(59), 96};
  CHECK(principal_form_str(f27) == "2^59*n+27");
  PrincipalForm f3{Nat(3), 4, Nat(16), 6};
  CHECK(principal_form_str(f3) == "16*n+3");
}

TEST_CASE("floating even-step formula matches exact arithmetic for small S") {
  const double a = std::log(3.0) / std::log(6.0);
  const double b = std::log(2.0) / std::log(6.0);
  auto table = even_steps_table(2000);
  for (u64 s = 2; s <= 2000; ++s) {
    double sa = static_cast<double>(s) * a;
    u64 e_float = static_cast<u64>(
        (std::trunc(sa + b) - std::trunc(sa)) * std::trunc(sa + b));
    auto exact = table[s - 1];
    if (exact) {
      CHECK(e_float == *exact);
    } else {
      CHECK(e_float == 0);
    }
  }
}
