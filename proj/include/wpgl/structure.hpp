#ifndef WPGL_STRUCTURE_HPP
#define WPGL_STRUCTURE_HPP

#include <numeric>
#include <optional>
#include <vector>

#include "wpgl/counting.hpp"
#include "wpgl/matrix.hpp"
#include "wpgl/monomial.hpp"

namespace wpgl {

// Order of the band of scalar 2-automorphisms: the gcd of the weights.
inline long pi1_order(const WeightSignature& sig) { return sig.gcd_weights(); }

namespace detail {
// Completes column c (gcd 1) to M with det(M) = 1 by extended-gcd
// recursion on the tail. With u * c_1 + v * g = 1, g = gcd(tail), and N
// completing tail/g, take
//   M = [ c_1  -v  0 ]
//       [ tail  u*w  N_2..],  w = tail/g.
inline IntMatrix complete_unimodular(const std::vector<long long>& c) {
  const int t = static_cast<int>(c.size());
  IntMatrix m(t);
  if (t == 1) {
    require(c[0] == 1, "column is not unimodular");
    m.at(0, 0) = 1;
    return m;
  }
  long long g = 0;
  for (int i = 1; i < t; ++i) g = std::gcd(g, c[i]);
  long long u = 0, v = 1;
  if (g > 1) {
    // u = c_1^{-1} mod g, normalized into [1, g)
    long long t0 = 0, t1 = 1, r0 = g, r1 = c[0] % g;
    while (r1 != 0) {
      const long long q = r0 / r1;
      long long tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
      tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
    }
    require(r0 == 1, "column is not unimodular");
    u = ((t0 % g) + g) % g;
    v = (1 - u * c[0]) / g;
  }
  std::vector<long long> w(c.begin() + 1, c.end());
  for (auto& x : w) x /= g;
  const IntMatrix n = complete_unimodular(w);
  m.at(0, 0) = c[0];
  m.at(0, 1) = -v;
  for (int i = 1; i < t; ++i) {
    m.at(i, 0) = c[i];
    m.at(i, 1) = u * w[i - 1];
    for (int j = 2; j < t; ++j) m.at(i, j) = n.at(i - 1, j - 1);
  }
  return m;
}
}  // namespace detail

// For pairwise distinct weights: a t x t integer matrix with determinant
// exactly 1 whose first column is the weight vector divided by its gcd.
inline IntMatrix splitting_matrix(const std::vector<long>& distinct_weights) {
  const int t = static_cast<int>(distinct_weights.size());
  require(t >= 1, "empty weight list");
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      require(distinct_weights[i] != distinct_weights[j],
              "weights must be pairwise distinct");
  long long g = 0;
  for (long w : distinct_weights) {
    require(w >= 1, "weights must be positive");
    g = std::gcd(g, static_cast<long long>(w));
  }
  std::vector<long long> c;
  for (long w : distinct_weights) c.push_back(w / g);
  IntMatrix m = detail::complete_unimodular(c);
  require(m.det() == 1, "unimodular completion failed");
  return m;
}

// Exponent rows of the torus action on a unipotent level: the coefficient
// of the basis monomial mu picks up lambda_a * prod_g lambda_g^{-e_g}
// under conjugation by the diagonal block scalars.
inline std::vector<std::vector<long>> unipotent_torus_exponents(
    const WeightSignature& sig, int level) {
  require(1 <= level && level <= sig.group_count(), "level index out of range");
  std::vector<std::vector<long>> rows;
  for (const Monomial& mu : enumerate_monomials(sig, sig.weight(level), level)) {
    std::vector<long> row(sig.group_count(), 0);
    for (int k = sig.params(); k < sig.symbol_count(); ++k)
      if (mu[k] != 0) row[sig.var_group_slot(k).first - 1] -= static_cast<long>(mu[k]);
    row[level - 1] += 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

enum class Pi0Class {
  kSplitTorus,      // all multiplicities 1: split, with an explicit witness
  kProjectiveBlock, // single distinct weight: the projectivized block group
  kMixedCokernel,   // mixed multiplicities: only the defining map's data
};

struct Pi0Report {
  std::vector<long long> k;               // per-level monomial counts
  std::vector<long long> unipotent_dims;  // r_a * k_a
  std::vector<int> reductive_ranks;       // r_1, ..., r_t
  long pi1 = 1;
  Pi0Class cls = Pi0Class::kMixedCokernel;
  std::optional<IntMatrix> splitting;  // kSplitTorus
  std::optional<int> block_rank;       // kProjectiveBlock: the multiplicity
};

inline Pi0Report pi0_report(const WeightSignature& sig) {
  Pi0Report r;
  bool all_simple = true;
  for (int a = 1; a <= sig.group_count(); ++a) {
    r.k.push_back(count_k(sig, a));
    r.unipotent_dims.push_back(r.k.back() * sig.multiplicity(a));
    r.reductive_ranks.push_back(sig.multiplicity(a));
    if (sig.multiplicity(a) != 1) all_simple = false;
  }
  r.pi1 = pi1_order(sig);
  if (sig.group_count() == 1) {
    r.cls = Pi0Class::kProjectiveBlock;
    r.block_rank = sig.multiplicity(1);
  } else if (all_simple) {
    r.cls = Pi0Class::kSplitTorus;
    std::vector<long> w;
    for (int a = 1; a <= sig.group_count(); ++a) w.push_back(sig.weight(a));
    r.splitting = splitting_matrix(w);
  } else {
    r.cls = Pi0Class::kMixedCokernel;
  }
  return r;
}

}  // namespace wpgl

#endif
