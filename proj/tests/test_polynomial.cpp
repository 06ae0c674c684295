#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "wpgl/polynomial.hpp"

using namespace wpgl;
using QPoly = GradedPolynomial<RationalField>;

namespace {
const RationalField kQ;

template <class F>
GradedPolynomial<F> random_poly(const WeightSignature& sig, const F& field,
                                wpgl::testing::Rng& rng, int max_terms = 4) {
  GradedPolynomial<F> p(sig, field);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, 2);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m = mono_one(sig);
    for (int k = 0; k < sig.symbol_count(); ++k)
      m[k] = static_cast<std::uint32_t>(exp(rng));
    p.add_term(m, wpgl::testing::random_elem(field, rng));
  }
  return p;
}

template <class F>
std::vector<typename F::Elem> random_point(const WeightSignature& sig, const F& field,
                                           wpgl::testing::Rng& rng) {
  std::vector<typename F::Elem> pt;
  for (int k = 0; k < sig.symbol_count(); ++k)
    pt.push_back(wpgl::testing::random_elem(field, rng));
  return pt;
}
}  // namespace

TEST_CASE("basic polynomial identities") {
  const WeightSignature sig({1, 2});
  const QPoly x = QPoly::variable(sig, kQ, 1, 1);
  const QPoly y = QPoly::variable(sig, kQ, 2, 1);
  const QPoly zero = QPoly::zero(sig, kQ);

  CHECK(x + zero == x);
  CHECK(x * x == x.pow(2));
  CHECK((x - x).is_zero());
  CHECK(x.str() == "x_1_1");
  CHECK((x * x).str() == "x_1_1^2");
}

TEST_CASE("difference of squares, with an evaluation cross-check") {
  // two weight-1 variables so x+y and x-y are legal graded values
  const WeightSignature sig({1, 1});
  const QPoly x = QPoly::variable(sig, kQ, 1, 1);
  const QPoly y = QPoly::variable(sig, kQ, 1, 2);
  const QPoly lhs = (x + y) * (x - y);
  const QPoly rhs = x * x - y * y;
  CHECK(lhs == rhs);

  wpgl::testing::Rng rng(5);
  for (int it = 0; it < 20; ++it) {
    const auto pt = random_point(sig, kQ, rng);
    CHECK(lhs.eval(pt) == (pt[0] + pt[1]) * (pt[0] - pt[1]));
  }
}

TEST_CASE("ring axioms on random triples, both fields") {
  wpgl::testing::Rng rng(17);
  const WeightSignature sig({1, 2, 3});
  auto run = [&](auto field) {
    for (int it = 0; it < 40; ++it) {
      const auto p = random_poly(sig, field, rng);
      const auto q = random_poly(sig, field, rng);
      const auto r = random_poly(sig, field, rng);
      CHECK(p + q == q + p);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p * q == q * p);
    }
  };
  run(kQ);
  run(PrimeField(5));
}

TEST_CASE("multiplication agrees with evaluation") {
  wpgl::testing::Rng rng(23);
  const WeightSignature sig({1, 1, 2});
  for (int it = 0; it < 25; ++it) {
    const auto p = random_poly(sig, kQ, rng);
    const auto q = random_poly(sig, kQ, rng);
    const auto pt = random_point(sig, kQ, rng);
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
  }
}

TEST_CASE("substitution") {
  const WeightSignature sig({1, 2});
  const QPoly x = QPoly::variable(sig, kQ, 1, 1);
  const QPoly y = QPoly::variable(sig, kQ, 2, 1);

  CHECK(x.substitute({x, y}) == x);

  const QPoly sheared = y + x * x;          // y + x^2
  CHECK(sheared.substitute({x, y - x * x}) == y);

  // (y + x^2)^2 expanded via substitution into y^2
  const QPoly ysq = y * y;
  const QPoly expanded = ysq.substitute({x, y + x * x});
  QPoly expected = y * y + (x * x * y).scaled(Rational(2)) + x.pow(4);
  CHECK(expanded == expected);

  CHECK_THROWS_AS(x.substitute({x}), Error);
  const WeightSignature other({1, 3});
  CHECK_THROWS_AS(x.substitute({QPoly::variable(other, kQ, 1, 1), y}), Error);
}

TEST_CASE("substitution is functorial") {
  wpgl::testing::Rng rng(41);
  const WeightSignature sig({1, 1});
  const QPoly x = QPoly::variable(sig, kQ, 1, 1);
  const QPoly y = QPoly::variable(sig, kQ, 1, 2);
  for (int it = 0; it < 15; ++it) {
    const auto p = random_poly(sig, kQ, rng, 3);
    // linear-ish assignments keep sizes small
    std::vector<QPoly> a = {x + y.scaled(wpgl::testing::random_rational(rng)), y};
    std::vector<QPoly> b = {x, y + x.scaled(wpgl::testing::random_rational(rng))};
    std::vector<QPoly> composed;
    for (const auto& img : a) composed.push_back(img.substitute(b));
    CHECK(p.substitute(a).substitute(b) == p.substitute(composed));
  }
}

TEST_CASE("weighted homogeneity") {
  const WeightSignature sig({1, 2, 4});
  const QPoly zero = QPoly::zero(sig, kQ);
  CHECK(zero.is_weighted_homogeneous(0));
  CHECK(zero.is_weighted_homogeneous(17));

  const QPoly y = QPoly::variable(sig, kQ, 2, 1);
  CHECK((y * y).is_weighted_homogeneous(4));
  CHECK_FALSE((y * y + y).is_weighted_homogeneous(4));
  CHECK((y * y).homogeneous_weight() == 4);
  CHECK_FALSE((y * y + y).homogeneous_weight().has_value());

  wpgl::testing::Rng rng(53);
  for (int it = 0; it < 20; ++it) {
    const auto p = wpgl::testing::random_homogeneous(sig, kQ, 4, 4, rng);
    const auto q = wpgl::testing::random_homogeneous(sig, kQ, 2, 4, rng);
    CHECK((p * q).is_weighted_homogeneous(6));
  }
}

TEST_CASE("parameters have weight zero and survive substitution") {
  const WeightSignature sig = WeightSignature({1, 2}).with_parameters(1);
  const QPoly a = QPoly::symbol(sig, kQ, 0);
  const QPoly x = QPoly::variable(sig, kQ, 1, 1);
  const QPoly y = QPoly::variable(sig, kQ, 2, 1);
  const QPoly p = y + a * x * x;
  CHECK(p.is_weighted_homogeneous(2));
  CHECK(p.substitute({x, y - a * x * x}) == y);
  CHECK(a.str() == "a");
  CHECK((-(a * x).scaled(Rational(2))).str() == "-2*a*x_1_1");
}

TEST_CASE("term order and rendering are deterministic") {
  const WeightSignature sig({1, 2});
  const QPoly x = QPoly::variable(sig, kQ, 1, 1);
  const QPoly y = QPoly::variable(sig, kQ, 2, 1);
  const QPoly p = y.scaled(Rational(-1, 2)) + x * x;
  CHECK(p.str() == "x_1_1^2 - 1/2*x_2_1");
  CHECK(QPoly::zero(sig, kQ).str() == "0");
}
