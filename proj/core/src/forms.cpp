#include "collatz/forms.hpp"

#include <stdexcept>

namespace collatz {

FormDescriptor decompose(const Nat& c) {
  if (c.is_zero()) throw std::domain_error("decompose: value must be >= 1");
  Nat succ = c + 1;
  const std::uint64_t p = succ.trailing_zeros() + 1;
  // n = (c + 1 - 2^(p-1)) / 2^p
  succ -= Nat::pow2(p - 1);
  succ >>= p;
  return FormDescriptor{p, std::move(succ), FormKind::standard};
}

Nat reconstruct(const FormDescriptor& d) {
  if (d.p == 0) throw std::domain_error("reconstruct: power must be >= 1");
  Nat v = d.n;
  v <<= d.p;
  v += Nat::pow2(d.kind == FormKind::standard ? d.p - 1 : d.p);
  v -= 1;
  return v;
}

Nat standard_base(const Nat& c) { return Nat::pow2(decompose(c).p); }

std::vector<Nat> form_pattern(const Nat& lo, const Nat& hi) {
  std::vector<Nat> out;
  for (Nat c = lo; c <= hi; c += 1) out.push_back(standard_base(c));
  return out;
}

SymbolicForm expand_dotted(const std::vector<Nat>& components) {
  if (components.empty())
    throw std::domain_error("expand_dotted: at least one component required");
  for (const Nat& b : components) {
    if (b < Nat(2) || !b.is_power_of_two())
      throw std::domain_error(
          "expand_dotted: components must be powers of 2, each >= 2");
  }
  // Innermost component b: the standard form b*n + (b/2 - 1).
  SymbolicForm form{components.back(), components.back() >> 1};
  form.f -= 1;
  for (std::size_t i = components.size() - 1; i-- > 0;) {
    const Nat& b = components[i];
    Nat half = b >> 1;
    form.k *= b;
    form.f *= b;
    form.f += half - 1;
  }
  return form;
}

std::vector<Nat> parse_dotted(const std::string& spec) {
  std::vector<Nat> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t dot = spec.find('.', start);
    if (dot == std::string::npos) dot = spec.size();
    if (dot == start)
      throw std::invalid_argument("dotted form: empty component");
    out.push_back(Nat::from_decimal(spec.substr(start, dot - start)));
    start = dot + 1;
  }
  return out;
}

std::optional<std::size_t> find_pattern_shift(const std::vector<Nat>& a,
                                              const std::vector<Nat>& b,
                                              std::size_t window) {
  if (window > a.size() || window > b.size())
    throw std::domain_error("find_pattern_shift: window exceeds pattern");
  for (std::size_t s = 0; s + window <= b.size(); ++s) {
    bool match = true;
    for (std::size_t i = 0; i < window; ++i) {
      if (!(a[i] == b[s + i])) {
        match = false;
        break;
      }
    }
    if (match) return s;
  }
  return std::nullopt;
}

std::string form_notation(const Nat& base, const Nat& index,
                          const Nat& offset) {
  std::string out = base.to_decimal();
  out += '(';
  out += index.to_decimal();
  out += ')';
  if (!offset.is_zero()) {
    out += '+';
    out += offset.to_decimal();
  }
  return out;
}

std::string standard_form_str(const Nat& c) {
  FormDescriptor d = decompose(c);
  Nat base = Nat::pow2(d.p);
  Nat offset = Nat::pow2(d.p - 1) - 1;
  return form_notation(base, d.n, offset);
}

std::string SymbolicForm::str() const {
  std::string out;
  if (!(k == Nat(1))) out = k.to_decimal();
  out += 'n';
  if (!f.is_zero()) {
    out += '+';
    out += f.to_decimal();
  }
  return out;
}

}  // namespace collatz
