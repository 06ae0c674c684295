#ifndef WPGL_MONOMIAL_HPP
#define WPGL_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wpgl/weight_signature.hpp"

namespace wpgl {

// Exponent vector over all symbols of a signature (parameters first).
using Monomial = std::vector<std::uint32_t>;

inline Monomial mono_one(const WeightSignature& sig) {
  return Monomial(sig.symbol_count(), 0);
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  require(a.size() == b.size(), "signature mismatch");
  Monomial c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

// Parameters have weight 0 and never contribute.
inline long weighted_degree(const WeightSignature& sig, const Monomial& m) {
  require(static_cast<int>(m.size()) == sig.symbol_count(), "signature mismatch");
  long d = 0;
  for (int k = sig.params(); k < sig.symbol_count(); ++k)
    d += sig.symbol_weight(k) * static_cast<long>(m[k]);
  return d;
}

inline long param_degree(const WeightSignature& sig, const Monomial& m) {
  long d = 0;
  for (int k = 0; k < sig.params(); ++k) d += static_cast<long>(m[k]);
  return d;
}

// All exponent vectors of weighted degree exactly w. Only variables in
// groups i < group_bound (when given) and i != excluded_group are used;
// parameters never are. Order: exponent of the earliest usable variable
// descending, then recursively.
inline std::vector<Monomial> enumerate_monomials(
    const WeightSignature& sig, long w,
    std::optional<int> group_bound = std::nullopt,
    std::optional<int> excluded_group = std::nullopt) {
  std::vector<Monomial> out;
  if (w < 0) return out;
  std::vector<int> vars;  // usable flat indices, ascending
  for (int i = 1; i <= sig.group_count(); ++i) {
    if (group_bound && i >= *group_bound) break;
    if (excluded_group && i == *excluded_group) continue;
    for (int j = 1; j <= sig.multiplicity(i); ++j) vars.push_back(sig.var_index(i, j));
  }
  Monomial cur = mono_one(sig);
  // recursive descent over vars with remaining weight
  auto rec = [&](auto&& self, std::size_t idx, long rem) -> void {
    if (idx == vars.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    const long wt = sig.symbol_weight(vars[idx]);
    for (long e = rem / wt; e >= 0; --e) {
      cur[vars[idx]] = static_cast<std::uint32_t>(e);
      self(self, idx + 1, rem - e * wt);
    }
    cur[vars[idx]] = 0;
  };
  rec(rec, 0, w);
  return out;
}

}  // namespace wpgl

#endif
