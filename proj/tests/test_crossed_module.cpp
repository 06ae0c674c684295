#include <catch2/catch_amalgamated.hpp>

#include "wpgl/crossed_module.hpp"

using namespace wpgl;

namespace {
CrossedModule c2_into_c4(bool honest_action) {
  GroupPtr c2 = group_ptr(cyclic_group(2));
  GroupPtr c4 = group_ptr(cyclic_group(4));
  std::vector<int> boundary = {0, 2};
  // table [beta * 4 + a]
  std::vector<int> action(8, 0);
  for (int beta = 0; beta < 2; ++beta)
    for (int a = 0; a < 4; ++a)
      action[beta * 4 + a] = honest_action ? beta : (a % 2 == 0 ? beta : 1 - beta);
  return make_crossed_module(c2, c4, boundary, action);
}
}  // namespace

TEST_CASE("trivial and conjugation modules are valid") {
  GroupPtr c2 = group_ptr(cyclic_group(2));
  CHECK(check_crossed_module(shifted_module(c2)).valid());
  CHECK(check_crossed_module(discrete_module(c2)).valid());
  GroupPtr s3 = group_ptr(symmetric_group(3));
  CHECK(check_crossed_module(conjugation_module(s3)).valid());
  GroupPtr d4 = group_ptr(dihedral_group(4));
  CHECK(check_crossed_module(conjugation_module(d4)).valid());
}

TEST_CASE("the index-two inclusion with trivial action is valid") {
  CHECK(check_crossed_module(c2_into_c4(true)).valid());
}

TEST_CASE("a falsely declared action is witnessed") {
  const auto rep = check_crossed_module(c2_into_c4(false));
  REQUIRE_FALSE(rep.valid());
  bool found_cm1 = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "CM1") found_cm1 = true;
  CHECK(found_cm1);
}

TEST_CASE("nonabelian kernel data violates the Peiffer identity") {
  // [S3 -> 1] with the only possible action (trivial) fails CM2
  GroupPtr s3 = group_ptr(symmetric_group(3));
  GroupPtr one = group_ptr(cyclic_group(1));
  CrossedModule xm = make_crossed_module(s3, one, std::vector<int>(6, 0),
                                         {0, 1, 2, 3, 4, 5});
  const auto rep = check_crossed_module(xm);
  REQUIRE_FALSE(rep.valid());
  CHECK(rep.violations.front().axiom == "CM2");
}

TEST_CASE("homotopy groups of the worked modules") {
  GroupPtr c2 = group_ptr(cyclic_group(2));

  const CrossedModule shifted = shifted_module(c2);  // [C2 -> 1]
  CHECK(xm_pi0(shifted).group.order() == 1);
  CHECK(xm_pi1(shifted).group.order() == 2);

  const CrossedModule discrete = discrete_module(c2);  // [1 -> C2]
  CHECK(xm_pi0(discrete).group.order() == 2);
  CHECK(xm_pi1(discrete).group.order() == 1);

  const CrossedModule incl = c2_into_c4(true);  // [C2 -> C4]
  CHECK(xm_pi0(incl).group.order() == 2);
  CHECK(find_isomorphism(xm_pi0(incl).group, cyclic_group(2)).has_value());
  CHECK(xm_pi1(incl).group.order() == 1);

  GroupPtr s3 = group_ptr(symmetric_group(3));
  const CrossedModule conj = conjugation_module(s3);
  CHECK(xm_pi0(conj).group.order() == 1);
  CHECK(xm_pi1(conj).group.order() == 1);  // S3 has trivial center

  CHECK_THROWS_AS(xm_pi0(c2_into_c4(false)), Error);
}

TEST_CASE("pi1 is abelian across a corpus") {
  std::vector<CrossedModule> corpus;
  GroupPtr c4 = group_ptr(cyclic_group(4));
  GroupPtr q8 = group_ptr(quaternion_group());
  GroupPtr d4 = group_ptr(dihedral_group(4));
  corpus.push_back(shifted_module(c4));
  corpus.push_back(conjugation_module(q8));   // pi1 = center = C2
  corpus.push_back(conjugation_module(d4));
  corpus.push_back(c2_into_c4(true));
  for (const auto& xm : corpus) CHECK(xm_pi1(xm).group.is_abelian());
}

TEST_CASE("the action on the boundary image matches conjugation") {
  // CM1 gives d(beta^a) = a^-1 d(beta) a; check the two routes agree on a
  // valid module with nontrivial everything
  GroupPtr s3 = group_ptr(symmetric_group(3));
  const CrossedModule xm = conjugation_module(s3);
  for (int beta = 0; beta < 6; ++beta)
    for (int a = 0; a < 6; ++a)
      CHECK(xm.bnd(xm.act(beta, a)) ==
            s3->mul(s3->mul(s3->inv(a), xm.bnd(beta)), a));
}

TEST_CASE("normal inclusion with conjugation action") {
  // C3 inside S3 with the restricted conjugation action: the action is
  // genuinely nontrivial (transpositions invert the 3-cycles)
  GroupPtr s3 = group_ptr(symmetric_group(3));
  std::vector<int> cycles = {0};
  for (int x = 1; x < 6; ++x)
    if (s3->element_order(x) == 3) cycles.push_back(x);
  REQUIRE(cycles.size() == 3);
  const SubgroupView c3 = subgroup_view(*s3, cycles);
  GroupPtr g1 = group_ptr(c3.group);

  std::vector<int> pos(6, -1);
  for (int k = 0; k < 3; ++k) pos[c3.elems[k]] = k;
  std::vector<int> boundary(3), action(3 * 6);
  for (int b = 0; b < 3; ++b) {
    boundary[b] = c3.elems[b];
    for (int a = 0; a < 6; ++a)
      action[b * 6 + a] = pos[s3->mul(s3->mul(s3->inv(a), c3.elems[b]), a)];
  }
  const CrossedModule xm = make_crossed_module(g1, s3, boundary, action);
  CHECK(check_crossed_module(xm).valid());
  bool nontrivial = false;
  for (int b = 0; b < 3; ++b)
    for (int a = 0; a < 6; ++a)
      if (xm.act(b, a) != b) nontrivial = true;
  CHECK(nontrivial);
  CHECK(xm_pi0(xm).group.order() == 2);
  CHECK(xm_pi1(xm).group.order() == 1);
}

TEST_CASE("strict morphism detection") {
  GroupPtr c2 = group_ptr(cyclic_group(2));
  GroupPtr s3 = group_ptr(symmetric_group(3));
  const CrossedModule src = discrete_module(c2);
  const CrossedModule dst = discrete_module(s3);
  // embed C2 as the subgroup generated by a transposition
  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->element_order(x) == 2) {
      transposition = x;
      break;
    }
  std::vector<int> f0 = {0, transposition};
  CHECK(is_strict_morphism(src, dst, {0}, f0));
  // not a hom: 1 -> element of order 3
  int rot = -1;
  for (int x = 1; x < 6; ++x)
    if (s3->element_order(x) == 3) {
      rot = x;
      break;
    }
  CHECK_FALSE(is_strict_morphism(src, dst, {0}, {0, rot}));
}
