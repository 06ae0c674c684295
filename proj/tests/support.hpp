#ifndef WPGL_TESTS_SUPPORT_HPP
#define WPGL_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "wpgl/equivariant.hpp"

namespace wpgl::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

template <class F>
typename F::Elem random_elem(const F& field, Rng& rng);

template <>
inline Rational random_elem<RationalField>(const RationalField&, Rng& rng) {
  return random_rational(rng);
}

template <>
inline FpElem random_elem<PrimeField>(const PrimeField& field, Rng& rng) {
  std::uniform_int_distribution<long> d(0, static_cast<long>(field.modulus()) - 1);
  return field.from_int(d(rng));
}

template <class F>
typename F::Elem random_nonzero_elem(const F& field, Rng& rng) {
  for (;;) {
    auto e = random_elem(field, rng);
    if (!e.is_zero()) return e;
  }
}

// Random polynomial supported on the weight-w monomials in groups < bound.
template <class F>
GradedPolynomial<F> random_homogeneous(const WeightSignature& sig, const F& field,
                                       long w, int group_bound, Rng& rng) {
  GradedPolynomial<F> p(sig, field);
  for (const Monomial& m : enumerate_monomials(sig, w, group_bound))
    p.add_term(m, random_elem(field, rng));
  return p;
}

template <class F>
Unipotent<F> random_unipotent(const WeightSignature& sig, const F& field, Rng& rng) {
  typename Unipotent<F>::Table t;
  for (int i = 1; i <= sig.group_count(); ++i) {
    std::vector<GradedPolynomial<F>> row;
    for (int j = 1; j <= sig.multiplicity(i); ++j)
      row.push_back(i == 1 ? GradedPolynomial<F>::zero(sig, field)
                           : random_homogeneous(sig, field, sig.weight(i), i, rng));
    t.push_back(std::move(row));
  }
  return Unipotent<F>::from_table(sig, field, t);
}

template <class F>
BlockLinear<F> random_invertible_blocks(const WeightSignature& sig, const F& field,
                                        Rng& rng) {
  for (;;) {
    std::vector<Matrix<F>> blocks;
    for (int i = 1; i <= sig.group_count(); ++i) {
      Matrix<F> m(sig.multiplicity(i), sig.multiplicity(i), field);
      for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b) m.at(a, b) = random_elem(field, rng);
      blocks.push_back(std::move(m));
    }
    BlockLinear<F> l(sig, field, std::move(blocks));
    if (l.invertible()) return l;
  }
}

template <class F>
Automorphism<F> random_automorphism(const WeightSignature& sig, const F& field,
                                    Rng& rng) {
  const Unipotent<F> u = random_unipotent(sig, field, rng);
  const BlockLinear<F> l = random_invertible_blocks(sig, field, rng);
  return Automorphism<F>(u.to_endomorphism().compose(l.to_endomorphism()));
}

}  // namespace wpgl::testing

#endif
