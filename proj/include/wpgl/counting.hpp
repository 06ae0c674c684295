#ifndef WPGL_COUNTING_HPP
#define WPGL_COUNTING_HPP

#include <map>
#include <vector>

#include "wpgl/weight_signature.hpp"

namespace wpgl {

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {
// number of solutions of sum w_i * z_i = target in non-negative integers,
// by recursive splitting on the first weight
inline long long count_solutions(const std::vector<long>& weights, long long target,
                                 std::size_t idx,
                                 std::map<std::pair<std::size_t, long long>, long long>& memo) {
  if (target < 0) return 0;
  if (idx == weights.size()) return target == 0 ? 1 : 0;
  const auto key = std::make_pair(idx, target);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  long long total = 0;
  for (long long v = 0; v * weights[idx] <= target; ++v)
    total += count_solutions(weights, target - v * weights[idx], idx + 1, memo);
  memo[key] = total;
  return total;
}

inline long long count_solutions(const std::vector<long>& weights, long long target) {
  std::map<std::pair<std::size_t, long long>, long long> memo;
  return count_solutions(weights, target, 0, memo);
}
}  // namespace detail

// k_a: number of monomials of weight m_a in variables of group index < a.
// k_1 = 0 for every signature with positive weights.
inline long long count_k(const WeightSignature& sig, int a) {
  require(1 <= a && a <= sig.group_count(), "level index out of range");
  std::vector<long> w;
  for (int i = 1; i < a; ++i)
    for (int j = 0; j < sig.multiplicity(i); ++j) w.push_back(sig.weight(i));
  return detail::count_solutions(w, sig.weight(a));
}

// d_l(a,b): monomials of weight m_b - l*m_a in variables of group < b,
// group a excluded.
inline long long count_d(const WeightSignature& sig, int a, int b, long l) {
  require(1 <= a && a < b && b <= sig.group_count(), "level indices out of range");
  require(0 <= l && l <= sig.weight(b) / sig.weight(a), "l out of range");
  std::vector<long> w;
  for (int i = 1; i < b; ++i) {
    if (i == a) continue;
    for (int j = 0; j < sig.multiplicity(i); ++j) w.push_back(sig.weight(i));
  }
  return detail::count_solutions(w, sig.weight(b) - l * sig.weight(a));
}

// Number of solutions of sum n_i * a_i = deg over the raw weights
// (dimension of the degree-deg graded piece). Negative degrees count zero.
inline long long global_section_count(const WeightSignature& sig, long long deg) {
  if (deg < 0) return 0;
  return detail::count_solutions(sig.raw(), deg);
}

// Coefficients 0..upto of prod_i 1/(1 - q^{n_i}); an independent route to
// the same counts, used as a cross-check.
inline std::vector<long long> section_series(const WeightSignature& sig, long long upto) {
  require(upto >= 0, "negative truncation degree");
  std::vector<long long> dp(static_cast<std::size_t>(upto) + 1, 0);
  dp[0] = 1;
  for (long n : sig.raw())
    for (long long d = n; d <= upto; ++d) dp[d] += dp[d - n];
  return dp;
}

}  // namespace wpgl

#endif
