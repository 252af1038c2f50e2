#pragma once

/// Cascades, their closed-form transforms, and reverse-cascade ladders.
///
/// A cascade is the forced run of cycles from an odd start down through
/// its forms: 2p-1 steps for a 2^p-form start (p-1 odd steps, p even
/// steps), ending one even step after the first 2-form value. The result
/// is given in closed form by 2^p*n + 2^(p-1) - 1 -> 3^(p-1)*n +
/// (3^(p-1)-1)/2. A ladder walks the unique reverse cascade upward while
/// the index stays congruent to 1 mod 3; its top is the maximum cascade
/// start (maximum form, minimum value).

#include <cstdint>
#include <optional>
#include <vector>

#include "collatz/forms.hpp"
#include "collatz/nat.hpp"

namespace collatz {

enum class StepKind { odd, even };

struct CascadeTrace {
  Nat start;
  std::vector<std::pair<Nat, StepKind>> steps;  // value after each step
  Nat result;
  Nat peak;  // largest value reached, start included
};

struct LadderTrace {
  Nat target;
  std::vector<Nat> rungs;  // 2*target first, maximum cascade start last
  Nat mcs;
};

struct PmcsResult {
  Nat value;               // first odd multiple of 3 in the chain
  std::vector<Nat> chain;  // starting value, then each successive MCS
};

/// Fixed: every member of the form has standard base `base`.
/// Mix: the standard base varies with the index; `base` is the smallest
/// base occurring (printed with a trailing '+').
struct FormClass {
  bool mix = false;
  Nat base;

  bool operator==(const FormClass&) const = default;
};

/// One odd cycle (3c+1 then halve). Takes a 2^p-form to the 2^(p-1)-form
/// with index 3n+1; computed both ways and cross-checked. Rejects evens.
Nat odd_cycle(const Nat& c);

/// Runs the full cascade of c. An even start is the stand-alone
/// 2-cascade: a single halving.
CascadeTrace run_cascade(const Nat& c);

/// 3^(p-1)*n + (3^(p-1)-1)/2; the cascade result for start (p, n).
Nat cascade_transform(std::uint64_t p, const Nat& n);

/// The cascade transform applied to a whole fixed-base form family:
/// 2^p-form k*n+f maps to 3^(p-1)*(k/2^p)*n + 3^(p-1)*m0 + (3^(p-1)-1)/2
/// where m0 is the index of the offset. Requires classify_form(s) Fixed
/// with base 2^p, p >= 2, and 2^p | k.
SymbolicForm symbolic_cascade_transform(const SymbolicForm& s);

/// Standard-base behaviour of the members of k*n + f.
FormClass classify_form(const SymbolicForm& s);

/// Ladder from v up to its maximum cascade start.
LadderTrace mcs(const Nat& v);

/// Iterates mcs until an odd multiple of 3 is reached. Rejects
/// multiples of 3 (they cannot result from a cascade). nullopt when
/// max_iter successive ladders do not reach one.
std::optional<PmcsResult> pmcs(const Nat& v, std::uint64_t max_iter = 1000);

/// First k seeds: 1, 5, 21, 85, ... (K_{i+1} = 4*K_i + 1).
std::vector<Nat> seeds(std::uint64_t count);

/// True iff 3c+1 is a power of 2 (c odd).
bool is_seed(const Nat& c);

}  // namespace collatz
