#ifndef WPGL_CROSSED_MODULE_HPP
#define WPGL_CROSSED_MODULE_HPP

#include <utility>

#include "wpgl/group_maps.hpp"

namespace wpgl {

// A pair of finite groups with boundary map and right action. Instances
// are plain data; check_crossed_module decides validity and the
// structural operations demand it.
struct CrossedModule {
  GroupPtr g1, g0;
  std::vector<int> boundary;  // G1 -> G0 value table
  std::vector<int> action;    // [beta * |G0| + a] = beta^a

  int bnd(int beta) const { return boundary[beta]; }
  int act(int beta, int a) const {
    return action[static_cast<std::size_t>(beta) * g0->order() + a];
  }
};

inline CrossedModule make_crossed_module(GroupPtr g1, GroupPtr g0,
                                         std::vector<int> boundary,
                                         std::vector<int> action) {
  return CrossedModule{std::move(g1), std::move(g0), std::move(boundary),
                       std::move(action)};
}

// [G -> G] identity with conjugation action.
inline CrossedModule conjugation_module(GroupPtr g) {
  return CrossedModule{g, g, identity_hom(g).values(),
                       RightAction::conjugation(g).table()};
}

// [1 -> G]: the group sitting in degree 0.
inline CrossedModule discrete_module(GroupPtr g) {
  GroupPtr one = group_ptr(cyclic_group(1));
  return CrossedModule{one, g, std::vector<int>{0}, std::vector<int>(g->order(), 0)};
}

// [A -> 1]: the group shifted into degree 1; A must be abelian for CM2.
inline CrossedModule shifted_module(GroupPtr a) {
  GroupPtr one = group_ptr(cyclic_group(1));
  std::vector<int> act(a->order());
  for (int b = 0; b < a->order(); ++b) act[b] = b;
  return CrossedModule{std::move(a), one, std::vector<int>(act.size(), 0), act};
}

inline void check_shapes(const CrossedModule& xm) {
  require(xm.g1 && xm.g0, "crossed module is missing a group");
  require(xm.boundary.size() == static_cast<std::size_t>(xm.g1->order()),
          "boundary table has wrong size");
  require(xm.action.size() ==
              static_cast<std::size_t>(xm.g1->order()) * xm.g0->order(),
          "action table has wrong size");
}

// Verifies the two crossed-module axioms on top of the map tables being a
// homomorphism and a genuine right action; every violated instance is
// reported with witnesses.
inline ValidationReport check_crossed_module(const CrossedModule& xm,
                                             const std::string& where = "") {
  check_shapes(xm);
  ValidationReport rep;
  scan_hom(*xm.g1, *xm.g0, xm.boundary, where.empty() ? "boundary" : where + ".boundary",
           rep.violations);
  scan_action(*xm.g1, *xm.g0, xm.action, where.empty() ? "action" : where + ".action",
              rep.violations);
  const FiniteGroup& g1 = *xm.g1;
  const FiniteGroup& g0 = *xm.g0;
  // one witness per axiom keeps reports readable
  [&] {
    for (int beta = 0; beta < g1.order(); ++beta)
      for (int a = 0; a < g0.order(); ++a)
        if (xm.bnd(xm.act(beta, a)) != g0.mul(g0.mul(g0.inv(a), xm.bnd(beta)), a)) {
          rep.violations.push_back({"CM1", where, {{"beta", beta}, {"a", a}},
                                    "d(beta^a) != a^-1 d(beta) a"});
          return;
        }
  }();
  [&] {
    for (int alpha = 0; alpha < g1.order(); ++alpha)
      for (int beta = 0; beta < g1.order(); ++beta)
        if (xm.act(beta, xm.bnd(alpha)) !=
            g1.mul(g1.mul(g1.inv(alpha), beta), alpha)) {
          rep.violations.push_back({"CM2", where, {{"alpha", alpha}, {"beta", beta}},
                                    "beta^(d alpha) != alpha^-1 beta alpha"});
          return;
        }
  }();
  return rep;
}

inline void require_valid(const CrossedModule& xm) {
  const ValidationReport rep = check_crossed_module(xm);
  require(rep.valid(), "invalid crossed module" +
                           (rep.violations.empty()
                                ? std::string()
                                : ": " + rep.violations.front().axiom + " fails"));
}

// Kernel of the boundary; central in G1 for every valid crossed module,
// and that is verified here rather than assumed.
inline SubgroupView xm_pi1(const CrossedModule& xm) {
  require_valid(xm);
  std::vector<int> ker;
  for (int b = 0; b < xm.g1->order(); ++b)
    if (xm.bnd(b) == 0) ker.push_back(b);
  std::vector<bool> in(xm.g1->order(), false);
  for (int b : ker) in[b] = true;
  for (int b : ker)
    for (int a = 0; a < xm.g1->order(); ++a)
      require(xm.g1->mul(b, a) == xm.g1->mul(a, b), "kernel of the boundary is not central");
  return subgroup_view(*xm.g1, ker);
}

// Cokernel of the boundary; the image is verified normal and the quotient
// uses canonical minimal coset representatives.
inline QuotientView xm_pi0(const CrossedModule& xm) {
  require_valid(xm);
  std::vector<int> im;
  for (int b = 0; b < xm.g1->order(); ++b) im.push_back(xm.bnd(b));
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  require(is_normal(*xm.g0, im), "image of the boundary is not normal");
  return quotient_view(*xm.g0, im);
}

// Strict morphism of crossed modules: a pair of homomorphisms commuting
// with the boundaries and respecting the actions.
inline bool is_strict_morphism(const CrossedModule& src, const CrossedModule& dst,
                               const std::vector<int>& f1, const std::vector<int>& f0) {
  std::vector<Violation> v;
  scan_hom(*src.g1, *dst.g1, f1, "f1", v);
  scan_hom(*src.g0, *dst.g0, f0, "f0", v);
  if (!v.empty()) return false;
  for (int beta = 0; beta < src.g1->order(); ++beta)
    if (f0[src.bnd(beta)] != dst.bnd(f1[beta])) return false;
  for (int beta = 0; beta < src.g1->order(); ++beta)
    for (int h = 0; h < src.g0->order(); ++h)
      if (f1[src.act(beta, h)] != dst.act(f1[beta], f0[h])) return false;
  return true;
}

}  // namespace wpgl

#endif
