#ifndef WPGL_WEIGHT_SIGNATURE_HPP
#define WPGL_WEIGHT_SIGNATURE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wpgl/common.hpp"

namespace wpgl {

// A weight sequence (n_0,...,n_r), normalized to distinct weights
// m_1 < ... < m_t with multiplicities r_1,...,r_t. Variables are addressed
// as (group i, slot j), 1 <= i <= t, 1 <= j <= r_i, written "x_i_j".
//
// A signature may additionally carry formal parameters: weight-0 symbols
// that take part in polynomial arithmetic but never in weighted degrees or
// monomial enumeration. They are used for symbolic conjugation
// computations and are not part of the serialized formats.
class WeightSignature {
public:
  explicit WeightSignature(std::vector<long> raw) : raw_(std::move(raw)) {
    require(raw_.size() >= 2, "signature needs at least two weights");
    for (long w : raw_) require(w >= 1, "weights must be positive");
    std::vector<long> sorted = raw_;
    std::sort(sorted.begin(), sorted.end());
    for (long w : sorted) {
      if (!weights_.empty() && weights_.back() == w) {
        ++mults_.back();
      } else {
        weights_.push_back(w);
        mults_.push_back(1);
      }
    }
    offsets_.resize(weights_.size());
    int off = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      offsets_[i] = off;
      off += mults_[i];
    }
    gcd_ = 0;
    for (long w : raw_) gcd_ = std::gcd(gcd_, w);
  }

  const std::vector<long>& raw() const { return raw_; }
  int group_count() const { return static_cast<int>(weights_.size()); }
  long weight(int i) const {  // 1-based group index
    require(1 <= i && i <= group_count(), "group index out of range");
    return weights_[i - 1];
  }
  int multiplicity(int i) const {
    require(1 <= i && i <= group_count(), "group index out of range");
    return mults_[i - 1];
  }
  int var_count() const { return static_cast<int>(raw_.size()); }
  int params() const { return params_; }
  int symbol_count() const { return params_ + var_count(); }
  long gcd_weights() const { return gcd_; }

  // Flat symbol index of x_i_j; parameters occupy indices [0, params).
  int var_index(int i, int j) const {
    require(1 <= j && j <= multiplicity(i), "slot index out of range");
    return params_ + offsets_[i - 1] + (j - 1);
  }
  bool is_param(int flat) const { return flat < params_; }
  // (group, slot) of a non-parameter flat index, both 1-based.
  std::pair<int, int> var_group_slot(int flat) const {
    require(flat >= params_ && flat < symbol_count(), "symbol index out of range");
    const int v = flat - params_;
    for (int i = group_count(); i >= 1; --i)
      if (v >= offsets_[i - 1]) return {i, v - offsets_[i - 1] + 1};
    throw Error("symbol index out of range");
  }
  long symbol_weight(int flat) const {
    if (is_param(flat)) return 0;
    return weights_[var_group_slot(flat).first - 1];
  }

  std::string symbol_name(int flat) const {
    if (is_param(flat))
      return params_ == 1 ? std::string("a") : "a_" + std::to_string(flat + 1);
    auto [i, j] = var_group_slot(flat);
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
  }

  WeightSignature with_parameters(int k) const {
    require(k >= 0, "negative parameter count");
    WeightSignature s = *this;
    s.params_ += k;
    return s;
  }

  bool operator==(const WeightSignature& o) const {
    return raw_ == o.raw_ && params_ == o.params_;
  }
  bool operator!=(const WeightSignature& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < raw_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(raw_[i]);
    }
    return s + ")";
  }

private:
  std::vector<long> raw_;
  std::vector<long> weights_;
  std::vector<int> mults_;
  std::vector<int> offsets_;
  long gcd_ = 0;
  int params_ = 0;
};

}  // namespace wpgl

#endif
