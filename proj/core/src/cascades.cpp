#include "collatz/cascades.hpp"

#include <stdexcept>

#include "collatz/sequence.hpp"

namespace collatz {

Nat odd_cycle(const Nat& c) {
  if (c.is_even()) throw std::domain_error("odd_cycle: value must be odd");
  Nat direct = c;
  direct *= 3;
  direct += 1;
  direct >>= 1;

  FormDescriptor d = decompose(c);  // p >= 2 for odd c
  Nat via_form = reconstruct(d.p - 1, d.n * 3 + 1);
  if (!(direct == via_form))
    throw std::logic_error("odd_cycle: direct and form routes disagree");
  return direct;
}

CascadeTrace run_cascade(const Nat& c) {
  if (c.is_zero()) throw std::domain_error("run_cascade: value must be >= 1");
  CascadeTrace trace;
  trace.start = c;
  trace.peak = c;
  if (c.is_even()) {
    Nat half = c >> 1;
    trace.steps.emplace_back(half, StepKind::even);
    trace.result = std::move(half);
    return trace;
  }
  const std::uint64_t p = decompose(c).p;
  Nat cur = c;
  for (std::uint64_t i = 0; i < 2 * p - 1; ++i) {
    StepKind kind = cur.is_odd() ? StepKind::odd : StepKind::even;
    cur = collatz_step(cur);
    if (trace.peak < cur) trace.peak = cur;
    trace.steps.emplace_back(cur, kind);
  }
  trace.result = std::move(cur);
  return trace;
}

Nat cascade_transform(std::uint64_t p, const Nat& n) {
  if (p == 0) throw std::domain_error("cascade_transform: power must be >= 1");
  Nat three_p = Nat::pow(Nat(3), p - 1);
  Nat result = three_p * n;
  result += (three_p - 1) >> 1;
  return result;
}

FormClass classify_form(const SymbolicForm& s) {
  if (s.k.is_zero())
    throw std::domain_error("classify_form: coefficient must be >= 1");
  const std::uint64_t vk = s.k.is_odd() ? 0 : s.k.trailing_zeros();
  if (s.f.is_even()) {
    // Even offset: members are all even iff the coefficient is even.
    return FormClass{s.k.is_odd(), Nat(2)};
  }
  const std::uint64_t vf = (s.f + 1).trailing_zeros();
  if (vf < vk) return FormClass{false, Nat::pow2(vf + 1)};
  return FormClass{true, Nat::pow2(vk + 1)};
}

SymbolicForm symbolic_cascade_transform(const SymbolicForm& s) {
  FormClass cls = classify_form(s);
  if (cls.mix)
    throw std::domain_error(
        "symbolic_cascade_transform: Mix forms have no single cascade");
  const std::uint64_t p = cls.base.trailing_zeros();
  if (p < 2)
    throw std::domain_error(
        "symbolic_cascade_transform: 2-form families have no odd cascade");
  if (s.k.is_odd() || s.k.trailing_zeros() < p)
    throw std::domain_error(
        "symbolic_cascade_transform: base must divide the coefficient");

  const Nat three_p = Nat::pow(Nat(3), p - 1);
  Nat m0 = s.f - (Nat::pow2(p - 1) - 1);
  m0 >>= p;
  SymbolicForm out;
  out.k = three_p * (s.k >> p);
  out.f = three_p * m0 + ((three_p - 1) >> 1);
  return out;
}

LadderTrace mcs(const Nat& v) {
  if (v.is_zero()) throw std::domain_error("mcs: value must be >= 1");
  LadderTrace ladder;
  ladder.target = v;
  std::uint64_t p = 1;
  Nat index = v;
  ladder.rungs.push_back(v << 1);  // every cascade ends with a 2-cycle
  while (index.mod_u64(3) == 1) {
    auto [t, rem] = (index - 1).divmod_u64(3);
    (void)rem;
    index = std::move(t);
    ++p;
    ladder.rungs.push_back(reconstruct(p, index));
  }
  ladder.mcs = ladder.rungs.back();
  return ladder;
}

std::optional<PmcsResult> pmcs(const Nat& v, std::uint64_t max_iter) {
  if (v.is_zero()) throw std::domain_error("pmcs: value must be >= 1");
  if (v.mod_u64(3) == 0)
    throw std::domain_error("pmcs: multiples of 3 cannot result from a cascade");
  PmcsResult res;
  res.chain.push_back(v);
  Nat cur = v;
  for (std::uint64_t i = 0; i < max_iter; ++i) {
    Nat next = mcs(cur).mcs;
    res.chain.push_back(next);
    if (next.is_odd() && next.mod_u64(3) == 0) {
      res.value = std::move(next);
      return res;
    }
    cur = std::move(next);
  }
  return std::nullopt;
}

std::vector<Nat> seeds(std::uint64_t count) {
  std::vector<Nat> out;
  Nat k(1);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(k);
    k *= 4;
    k += 1;
  }
  return out;
}

bool is_seed(const Nat& c) {
  if (c.is_even()) return false;
  return (c * 3 + 1).is_power_of_two();
}

}  // namespace collatz
