#ifndef WPGL_EQUIVARIANT_HPP
#define WPGL_EQUIVARIANT_HPP

#include <utility>
#include <vector>

#include "wpgl/matrix.hpp"
#include "wpgl/polynomial.hpp"

namespace wpgl {

template <CoefficientField F>
class BlockLinear;
template <CoefficientField F>
class Unipotent;

// An equivariant polynomial endomorphism: one component F^i_j per
// coordinate, each weighted-homogeneous of weight m_i. Every component
// then splits as a linear form in its own group's variables plus a
// polynomial in strictly lower groups; nothing else can carry the right
// weight.
template <CoefficientField F>
class Endomorphism {
public:
  using Poly = GradedPolynomial<F>;
  using Table = std::vector<std::vector<Poly>>;  // [group-1][slot-1]

  static Endomorphism validate(const WeightSignature& sig, const F& field,
                               const Table& table) {
    require(static_cast<int>(table.size()) == sig.group_count(),
            "component table has wrong group count");
    for (int i = 1; i <= sig.group_count(); ++i) {
      require(static_cast<int>(table[i - 1].size()) == sig.multiplicity(i),
              "component table has wrong slot count in group " + std::to_string(i));
      for (int j = 1; j <= sig.multiplicity(i); ++j) {
        const Poly& p = table[i - 1][j - 1];
        require(p.signature() == sig, "signature mismatch");
        require(p.field() == field, "field mismatch");
        require(p.is_weighted_homogeneous(sig.weight(i)),
                "component x_" + std::to_string(i) + "_" + std::to_string(j) +
                    " is not weighted-homogeneous of weight " +
                    std::to_string(sig.weight(i)));
      }
    }
    return Endomorphism(sig, field, table);
  }

  static Endomorphism identity(const WeightSignature& sig, const F& field) {
    Table t;
    for (int i = 1; i <= sig.group_count(); ++i) {
      std::vector<Poly> row;
      for (int j = 1; j <= sig.multiplicity(i); ++j)
        row.push_back(Poly::variable(sig, field, i, j));
      t.push_back(std::move(row));
    }
    return Endomorphism(sig, field, std::move(t));
  }

  const WeightSignature& signature() const { return sig_; }
  const F& field() const { return field_; }
  const Poly& component(int i, int j) const { return comp_[i - 1][j - 1]; }
  const Table& components() const { return comp_; }

  // (this o g)(x) = this(g(x)); the result is revalidated.
  Endomorphism compose(const Endomorphism& g) const {
    require(sig_ == g.sig_, "signature mismatch");
    require(field_ == g.field_, "field mismatch");
    std::vector<Poly> values;
    for (int i = 1; i <= sig_.group_count(); ++i)
      for (int j = 1; j <= sig_.multiplicity(i); ++j)
        values.push_back(g.component(i, j));
    Table t;
    for (int i = 1; i <= sig_.group_count(); ++i) {
      std::vector<Poly> row;
      for (int j = 1; j <= sig_.multiplicity(i); ++j)
        row.push_back(component(i, j).substitute(values));
      t.push_back(std::move(row));
    }
    return validate(sig_, field_, t);
  }

  // The block matrices of the terms linear in each group's own variables
  // (the derivative at the origin). Linear terms multiplied by formal
  // parameters have no matrix entry and are rejected.
  BlockLinear<F> linear_part() const;

  bool is_automorphism() const {
    const BlockLinear<F> l = linear_part();
    for (int i = 1; i <= sig_.group_count(); ++i)
      if (l.block(i).det().is_zero()) return false;
    return true;
  }

  bool operator==(const Endomorphism& o) const {
    return sig_ == o.sig_ && field_ == o.field_ && comp_ == o.comp_;
  }
  bool operator!=(const Endomorphism& o) const { return !(*this == o); }

private:
  Endomorphism(WeightSignature sig, F field, Table comp)
      : sig_(std::move(sig)), field_(std::move(field)), comp_(std::move(comp)) {}

  WeightSignature sig_;
  F field_;
  Table comp_;
};

// Block-diagonal linear endomorphism: one r_i x r_i matrix per distinct
// weight, acting on column vectors of the group's coordinates.
template <CoefficientField F>
class BlockLinear {
public:
  using Poly = GradedPolynomial<F>;

  BlockLinear(WeightSignature sig, F field, std::vector<Matrix<F>> blocks)
      : sig_(std::move(sig)), field_(std::move(field)), blocks_(std::move(blocks)) {
    require(static_cast<int>(blocks_.size()) == sig_.group_count(),
            "block count does not match signature");
    for (int i = 1; i <= sig_.group_count(); ++i)
      require(blocks_[i - 1].rows() == sig_.multiplicity(i) &&
                  blocks_[i - 1].cols() == sig_.multiplicity(i),
              "block size does not match multiplicity");
  }

  static BlockLinear identity(const WeightSignature& sig, const F& field) {
    std::vector<Matrix<F>> blocks;
    for (int i = 1; i <= sig.group_count(); ++i)
      blocks.push_back(Matrix<F>::identity(sig.multiplicity(i), field));
    return BlockLinear(sig, field, std::move(blocks));
  }

  const WeightSignature& signature() const { return sig_; }
  const F& field() const { return field_; }
  const Matrix<F>& block(int i) const { return blocks_[i - 1]; }

  bool invertible() const {
    for (const auto& b : blocks_)
      if (b.det().is_zero()) return false;
    return true;
  }

  BlockLinear inverse() const {
    std::vector<Matrix<F>> blocks;
    for (const auto& b : blocks_) {
      auto inv = b.inverse();
      require(inv.has_value(), "not an automorphism: singular linear block");
      blocks.push_back(*inv);
    }
    return BlockLinear(sig_, field_, std::move(blocks));
  }

  BlockLinear operator*(const BlockLinear& o) const {
    require(sig_ == o.sig_, "signature mismatch");
    std::vector<Matrix<F>> blocks;
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      blocks.push_back(blocks_[k] * o.blocks_[k]);
    return BlockLinear(sig_, field_, std::move(blocks));
  }

  Endomorphism<F> to_endomorphism() const {
    typename Endomorphism<F>::Table t;
    for (int i = 1; i <= sig_.group_count(); ++i) {
      std::vector<Poly> row;
      for (int j = 1; j <= sig_.multiplicity(i); ++j) {
        Poly p(sig_, field_);
        for (int k = 1; k <= sig_.multiplicity(i); ++k)
          p = p + Poly::variable(sig_, field_, i, k).scaled(block(i).at(j - 1, k - 1));
        row.push_back(p);
      }
      t.push_back(std::move(row));
    }
    return Endomorphism<F>::validate(sig_, field_, t);
  }

  bool operator==(const BlockLinear& o) const {
    return sig_ == o.sig_ && field_ == o.field_ && blocks_ == o.blocks_;
  }
  bool operator!=(const BlockLinear& o) const { return !(*this == o); }

private:
  WeightSignature sig_;
  F field_;
  std::vector<Matrix<F>> blocks_;
};

template <CoefficientField F>
BlockLinear<F> Endomorphism<F>::linear_part() const {
  std::vector<Matrix<F>> blocks;
  for (int i = 1; i <= sig_.group_count(); ++i) {
    Matrix<F> m(sig_.multiplicity(i), sig_.multiplicity(i), field_);
    for (int j = 1; j <= sig_.multiplicity(i); ++j) {
      for (const auto& [mono, c] : component(i, j).terms()) {
        // a term linear in group i is a bare x_i_k; anything else in
        // group i cannot occur at weight m_i
        int var = -1;
        bool in_group_i = false;
        for (int k = sig_.params(); k < sig_.symbol_count(); ++k) {
          if (mono[k] == 0) continue;
          if (sig_.var_group_slot(k).first == i) {
            in_group_i = true;
            var = k;
          }
        }
        if (!in_group_i) continue;
        require(param_degree(sig_, mono) == 0,
                "linear part carries formal parameters");
        m.at(j - 1, sig_.var_group_slot(var).second - 1) = c;
      }
    }
    blocks.push_back(std::move(m));
  }
  return BlockLinear<F>(sig_, field_, std::move(blocks));
}

// Element of the unipotent radical: x_i_j |-> x_i_j + P_i_j with P_i_j
// weighted-homogeneous of weight m_i in variables of strictly lower
// groups. The first group's table is always zero.
template <CoefficientField F>
class Unipotent {
public:
  using Poly = GradedPolynomial<F>;
  using Table = std::vector<std::vector<Poly>>;

  static Unipotent from_table(const WeightSignature& sig, const F& field,
                              const Table& table) {
    require(static_cast<int>(table.size()) == sig.group_count(),
            "shift table has wrong group count");
    for (int i = 1; i <= sig.group_count(); ++i) {
      require(static_cast<int>(table[i - 1].size()) == sig.multiplicity(i),
              "shift table has wrong slot count");
      for (int j = 1; j <= sig.multiplicity(i); ++j) {
        const Poly& p = table[i - 1][j - 1];
        require(p.signature() == sig, "signature mismatch");
        require(p.field() == field, "field mismatch");
        require(p.is_weighted_homogeneous(sig.weight(i)),
                "shift is not weighted-homogeneous");
        for (const auto& [mono, c] : p.terms())
          for (int k = sig.params(); k < sig.symbol_count(); ++k)
            require(mono[k] == 0 || sig.var_group_slot(k).first < i,
                    "shift uses variables of group >= its own");
      }
    }
    return Unipotent(sig, field, table);
  }

  static Unipotent identity(const WeightSignature& sig, const F& field) {
    Table t;
    for (int i = 1; i <= sig.group_count(); ++i)
      t.emplace_back(sig.multiplicity(i), Poly::zero(sig, field));
    return Unipotent(sig, field, std::move(t));
  }

  // Accepts exactly the endomorphisms of the form x + P with identity
  // linear part.
  static Unipotent from_endomorphism(const Endomorphism<F>& e) {
    const WeightSignature& sig = e.signature();
    const F& field = e.field();
    Table t;
    for (int i = 1; i <= sig.group_count(); ++i) {
      std::vector<Poly> row;
      for (int j = 1; j <= sig.multiplicity(i); ++j) {
        Poly p = e.component(i, j) - Poly::variable(sig, field, i, j);
        for (const auto& [mono, c] : p.terms())
          for (int k = sig.params(); k < sig.symbol_count(); ++k)
            require(mono[k] == 0 || sig.var_group_slot(k).first < i,
                    "endomorphism is not unipotent: linear part is not the identity");
        row.push_back(std::move(p));
      }
      t.push_back(std::move(row));
    }
    return from_table(sig, field, t);
  }

  const WeightSignature& signature() const { return sig_; }
  const F& field() const { return field_; }
  const Poly& shift(int i, int j) const { return shift_[i - 1][j - 1]; }
  const Table& shifts() const { return shift_; }

  bool is_identity() const {
    for (const auto& row : shift_)
      for (const auto& p : row)
        if (!p.is_zero()) return false;
    return true;
  }

  std::vector<int> active_levels() const {
    std::vector<int> lv;
    for (int i = 1; i <= sig_.group_count(); ++i)
      for (int j = 1; j <= sig_.multiplicity(i); ++j)
        if (!shift(i, j).is_zero()) {
          lv.push_back(i);
          break;
        }
    return lv;
  }

  Endomorphism<F> to_endomorphism() const {
    typename Endomorphism<F>::Table t;
    for (int i = 1; i <= sig_.group_count(); ++i) {
      std::vector<Poly> row;
      for (int j = 1; j <= sig_.multiplicity(i); ++j)
        row.push_back(Poly::variable(sig_, field_, i, j) + shift(i, j));
      t.push_back(std::move(row));
    }
    return Endomorphism<F>::validate(sig_, field_, t);
  }

  // Group-by-group inversion from the lowest weight upward: the inverse
  // shift at level i is -P^i evaluated at the already-inverted lower
  // levels, which is well-defined because P^i only sees groups < i.
  Unipotent inverse() const {
    Unipotent v = identity(sig_, field_);
    for (int i = 2; i <= sig_.group_count(); ++i) {
      std::vector<Poly> values;
      const Endomorphism<F> ve = v.to_endomorphism();
      for (int g = 1; g <= sig_.group_count(); ++g)
        for (int j = 1; j <= sig_.multiplicity(g); ++j)
          values.push_back(ve.component(g, j));
      for (int j = 1; j <= sig_.multiplicity(i); ++j)
        v.shift_[i - 1][j - 1] = -(shift(i, j).substitute(values));
    }
    return v;
  }

  // Peels factors from the lowest group upward: read off the group-a
  // shifts, right-cancel, recurse; so u = u_t o ... o u_2 with each
  // factor moving a single level. Identity levels are omitted.
  std::vector<Unipotent> factorize() const {
    std::vector<Unipotent> factors;
    Endomorphism<F> cur = to_endomorphism();
    for (int a = 2; a <= sig_.group_count(); ++a) {
      const Unipotent rest = from_endomorphism(cur);
      Table t;
      for (int i = 1; i <= sig_.group_count(); ++i) {
        if (i == a) {
          t.push_back(rest.shift_[i - 1]);
        } else {
          t.emplace_back(sig_.multiplicity(i), Poly::zero(sig_, field_));
        }
      }
      Unipotent ua = from_table(sig_, field_, t);
      if (ua.is_identity()) continue;
      factors.push_back(ua);
      cur = cur.compose(ua.inverse().to_endomorphism());
    }
    require(from_endomorphism(cur).is_identity(), "factorization did not terminate");
    return factors;
  }

  bool operator==(const Unipotent& o) const {
    return sig_ == o.sig_ && field_ == o.field_ && shift_ == o.shift_;
  }
  bool operator!=(const Unipotent& o) const { return !(*this == o); }

private:
  Unipotent(WeightSignature sig, F field, Table shift)
      : sig_(std::move(sig)), field_(std::move(field)), shift_(std::move(shift)) {}

  WeightSignature sig_;
  F field_;
  Table shift_;
};

// An endomorphism whose linear blocks are all invertible. The unipotent
// part never obstructs invertibility, so this is the full automorphism
// test.
template <CoefficientField F>
class Automorphism {
public:
  explicit Automorphism(Endomorphism<F> e) : e_(std::move(e)) {
    require(e_.is_automorphism(), "not an automorphism: singular linear block");
  }
  explicit Automorphism(const BlockLinear<F>& l) : Automorphism(l.to_endomorphism()) {}
  explicit Automorphism(const Unipotent<F>& u) : Automorphism(u.to_endomorphism()) {}

  static Automorphism identity(const WeightSignature& sig, const F& field) {
    return Automorphism(Endomorphism<F>::identity(sig, field));
  }

  const Endomorphism<F>& endo() const { return e_; }
  const WeightSignature& signature() const { return e_.signature(); }
  const F& field() const { return e_.field(); }

  Automorphism compose(const Automorphism& g) const {
    return Automorphism(e_.compose(g.e_));
  }

  // F = u o l with l the linear part; then u = F o l^{-1} automatically
  // has identity linear part.
  std::pair<Unipotent<F>, BlockLinear<F>> decompose() const {
    const BlockLinear<F> l = e_.linear_part();
    const Endomorphism<F> u_endo = e_.compose(l.inverse().to_endomorphism());
    return {Unipotent<F>::from_endomorphism(u_endo), l};
  }

  Automorphism inverse() const {
    auto [u, l] = decompose();
    const Endomorphism<F> li = l.inverse().to_endomorphism();
    const Endomorphism<F> ui = u.inverse().to_endomorphism();
    return Automorphism(li.compose(ui));
  }

  bool operator==(const Automorphism& o) const { return e_ == o.e_; }
  bool operator!=(const Automorphism& o) const { return !(*this == o); }

private:
  Endomorphism<F> e_;
};

// g o u o g^{-1}; lands back in the unipotent radical for every
// automorphism g since conjugation preserves the identity linear part.
template <CoefficientField F>
Unipotent<F> conjugate(const Automorphism<F>& g, const Unipotent<F>& u) {
  const Endomorphism<F> res =
      g.endo().compose(u.to_endomorphism()).compose(g.inverse().endo());
  return Unipotent<F>::from_endomorphism(res);
}

// The diagonal automorphism x_i_j |-> lambda^{m_i} x_i_j induced by the
// weighted torus action; central in the whole group.
template <CoefficientField F>
Automorphism<F> scalar_automorphism(const WeightSignature& sig, const F& field,
                                    const typename F::Elem& lambda) {
  require(!lambda.is_zero(), "scalar automorphism needs a nonzero scalar");
  std::vector<Matrix<F>> blocks;
  for (int i = 1; i <= sig.group_count(); ++i) {
    Matrix<F> m(sig.multiplicity(i), sig.multiplicity(i), field);
    const typename F::Elem s =
        elem_pow(lambda, static_cast<unsigned long>(sig.weight(i)), field.one());
    for (int j = 0; j < sig.multiplicity(i); ++j) m.at(j, j) = s;
    blocks.push_back(std::move(m));
  }
  return Automorphism<F>(BlockLinear<F>(sig, field, std::move(blocks)));
}

}  // namespace wpgl

#endif
