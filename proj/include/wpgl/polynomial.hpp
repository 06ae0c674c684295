#ifndef WPGL_POLYNOMIAL_HPP
#define WPGL_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpgl/field.hpp"
#include "wpgl/monomial.hpp"

namespace wpgl {

// Sparse multivariate polynomial over an exact field, with the weight
// grading of its signature. Terms are kept in a fixed order (descending
// exponent vectors) and zero coefficients are never stored, so equal
// polynomials have equal representations and serialization is
// deterministic.
template <CoefficientField F>
class GradedPolynomial {
public:
  using Elem = typename F::Elem;
  using Terms = std::map<Monomial, Elem, std::greater<Monomial>>;

  GradedPolynomial(WeightSignature sig, F field)
      : sig_(std::move(sig)), field_(std::move(field)) {}

  static GradedPolynomial zero(const WeightSignature& sig, const F& field) {
    return GradedPolynomial(sig, field);
  }

  static GradedPolynomial constant(const WeightSignature& sig, const F& field,
                                   const Elem& c) {
    GradedPolynomial p(sig, field);
    p.add_term(mono_one(sig), c);
    return p;
  }

  static GradedPolynomial symbol(const WeightSignature& sig, const F& field, int flat) {
    require(0 <= flat && flat < sig.symbol_count(), "symbol index out of range");
    Monomial m = mono_one(sig);
    m[flat] = 1;
    GradedPolynomial p(sig, field);
    p.add_term(m, field.one());
    return p;
  }

  static GradedPolynomial variable(const WeightSignature& sig, const F& field, int i,
                                   int j) {
    return symbol(sig, field, sig.var_index(i, j));
  }

  static GradedPolynomial from_terms(const WeightSignature& sig, const F& field,
                                     const std::vector<std::pair<Monomial, Elem>>& ts) {
    GradedPolynomial p(sig, field);
    for (const auto& [m, c] : ts) {
      require(static_cast<int>(m.size()) == sig.symbol_count(),
              "exponent vector does not match signature");
      p.add_term(m, c);
    }
    return p;
  }

  const WeightSignature& signature() const { return sig_; }
  const F& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Elem coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  GradedPolynomial operator-() const {
    GradedPolynomial r(sig_, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  GradedPolynomial operator+(const GradedPolynomial& o) const {
    check_compatible(o);
    GradedPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  GradedPolynomial operator-(const GradedPolynomial& o) const { return *this + (-o); }

  GradedPolynomial operator*(const GradedPolynomial& o) const {
    check_compatible(o);
    GradedPolynomial r(sig_, field_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }

  GradedPolynomial scaled(const Elem& c) const {
    GradedPolynomial r(sig_, field_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
  }

  GradedPolynomial pow(unsigned long e) const {
    GradedPolynomial acc = constant(sig_, field_, field_.one());
    GradedPolynomial base = *this;
    while (e > 0) {
      if (e & 1UL) acc = acc * base;
      base = base * base;
      e >>= 1UL;
    }
    return acc;
  }

  // Replaces every variable x_i_j by values[flat - params]; parameters are
  // left in place. Every variable must be assigned (the vector covers all
  // of them) and all values must share this signature and field.
  GradedPolynomial substitute(const std::vector<GradedPolynomial>& values) const {
    require(static_cast<int>(values.size()) == sig_.var_count(),
            "substitution must assign every variable");
    for (const auto& v : values) check_compatible(v);
    GradedPolynomial result(sig_, field_);
    for (const auto& [m, c] : terms_) {
      Monomial params_part = mono_one(sig_);
      for (int k = 0; k < sig_.params(); ++k) params_part[k] = m[k];
      GradedPolynomial term(sig_, field_);
      term.add_term(params_part, c);
      for (int k = sig_.params(); k < sig_.symbol_count(); ++k) {
        if (m[k] == 0) continue;
        term = term * values[k - sig_.params()].pow(m[k]);
        if (term.is_zero()) break;
      }
      result = result + term;
    }
    return result;
  }

  bool is_weighted_homogeneous(long w) const {
    for (const auto& [m, c] : terms_)
      if (weighted_degree(sig_, m) != w) return false;
    return true;  // the zero polynomial is homogeneous of every weight
  }

  // Common weighted degree of all terms; nullopt for the zero polynomial
  // or an inhomogeneous one.
  std::optional<long> homogeneous_weight() const {
    std::optional<long> w;
    for (const auto& [m, c] : terms_) {
      const long d = weighted_degree(sig_, m);
      if (!w)
        w = d;
      else if (*w != d)
        return std::nullopt;
    }
    return w;
  }

  Elem eval(const std::vector<Elem>& point) const {
    require(static_cast<int>(point.size()) == sig_.symbol_count(),
            "evaluation point must assign every symbol");
    Elem total = field_.zero();
    for (const auto& [m, c] : terms_) {
      Elem t = c;
      for (int k = 0; k < sig_.symbol_count(); ++k)
        if (m[k] != 0) t = t * elem_pow(point[k], m[k], field_.one());
      total = total + t;
    }
    return total;
  }

  bool operator==(const GradedPolynomial& o) const {
    if (sig_ != o.sig_ || !(field_ == o.field_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }
  bool operator!=(const GradedPolynomial& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string t = term_str(m, c);
      if (first) {
        out = t;
        first = false;
      } else if (!t.empty() && t[0] == '-') {
        out += " - " + t.substr(1);
      } else {
        out += " + " + t;
      }
    }
    return out;
  }

  void add_term(const Monomial& m, const Elem& c) {
    require(static_cast<int>(m.size()) == sig_.symbol_count(),
            "exponent vector does not match signature");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

private:
  void check_compatible(const GradedPolynomial& o) const {
    require(sig_ == o.sig_, "signature mismatch");
    require(field_ == o.field_, "field mismatch");
  }

  std::string term_str(const Monomial& m, const Elem& c) const {
    std::string vars;
    for (int k = 0; k < sig_.symbol_count(); ++k) {
      if (m[k] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += sig_.symbol_name(k);
      if (m[k] > 1) vars += "^" + std::to_string(m[k]);
    }
    if (vars.empty()) return c.str();
    if (c.is_one()) return vars;
    if ((-c).is_one()) return "-" + vars;
    return c.str() + "*" + vars;
  }

  WeightSignature sig_;
  F field_;
  Terms terms_;
};

}  // namespace wpgl

#endif
