#pragma once

/// Number-form algebra.
///
/// Every natural C has a unique standard decomposition
///   C = 2^p * n + 2^(p-1) - 1,   p >= 1, n >= 0,
/// with p = v2(C+1) + 1 (v2 = 2-adic valuation). p = 1 exactly for the
/// evens. The non-standard kind 2^p * n + 2^p - 1 expresses the
/// complementary residues and is never produced by decompose.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

enum class FormKind { standard, nonstandard };

struct FormDescriptor {
  std::uint64_t p = 1;
  Nat n;
  FormKind kind = FormKind::standard;

  bool operator==(const FormDescriptor&) const = default;
};

/// Linear form k*n + f over a whole-number index n.
///
/// Canonical forms keep f < k; stepping a form through a Collatz
/// sequence can leave that range (e.g. the minimum-base form 4n+5 of
/// offset 5), so the constraint is checkable rather than enforced.
struct SymbolicForm {
  Nat k{1};  // coefficient, >= 1
  Nat f;     // offset

  bool canonical() const { return f < k; }

  /// "18n+4", "2n", "n" style.
  std::string str() const;

  bool operator==(const SymbolicForm&) const = default;
};

/// Unique standard-kind (p, n) with c = 2^p*n + 2^(p-1) - 1. Rejects 0.
FormDescriptor decompose(const Nat& c);

/// Inverse of decompose; for the nonstandard kind, 2^p*n + 2^p - 1.
Nat reconstruct(const FormDescriptor& d);

inline Nat reconstruct(std::uint64_t p, const Nat& n,
                       FormKind kind = FormKind::standard) {
  return reconstruct(FormDescriptor{p, n, kind});
}

/// 2^p from the standard decomposition of c.
Nat standard_base(const Nat& c);

/// [standard_base(c) for c in lo..hi], empty when lo > hi.
std::vector<Nat> form_pattern(const Nat& lo, const Nat& hi);

/// Expands a dotted composite form, e.g. {16,4,8} -> 512n + 215.
/// Components nest right to left: the last component contributes its
/// standard form, each earlier component takes the inner expression as
/// its index. Components must be powers of 2, each >= 2.
SymbolicForm expand_dotted(const std::vector<Nat>& components);

/// Parses "16.4.8" into components for expand_dotted.
std::vector<Nat> parse_dotted(const std::string& spec);

/// Smallest s with a[0..window) == b[s..s+window), if any.
std::optional<std::size_t> find_pattern_shift(const std::vector<Nat>& a,
                                              const std::vector<Nat>& b,
                                              std::size_t window);

/// Paper-style notation "8(3)+3" / "2(41)" for the standard form of c.
std::string standard_form_str(const Nat& c);

/// "base(index)+offset" with the +offset omitted when zero.
std::string form_notation(const Nat& base, const Nat& index, const Nat& offset);

}  // namespace collatz
