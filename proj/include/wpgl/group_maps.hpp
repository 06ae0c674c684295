#ifndef WPGL_GROUP_MAPS_HPP
#define WPGL_GROUP_MAPS_HPP

#include <string>
#include <utility>
#include <vector>

#include "wpgl/finite_group.hpp"

namespace wpgl {

struct Violation {
  std::string axiom;  // "hom", "action", "CM1", "CM2", "B0", "B1", "B2", "B3", ...
  std::string where;  // map or side the witness lives in
  std::vector<std::pair<std::string, int>> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// ---------------------------------------------------------------------------
// Homomorphisms as value tables
// ---------------------------------------------------------------------------

inline void scan_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<int>& val, const std::string& where,
                     std::vector<Violation>& out) {
  require(val.size() == static_cast<std::size_t>(dom.order()),
          where + ": value table has wrong size");
  for (int v : val) require(0 <= v && v < cod.order(), where + ": value out of range");
  if (val[0] != 0)
    out.push_back({"hom", where, {{"a", 0}}, "identity is not preserved"});
  for (int a = 0; a < dom.order(); ++a)
    for (int b = 0; b < dom.order(); ++b)
      if (val[dom.mul(a, b)] != cod.mul(val[a], val[b])) {
        out.push_back({"hom", where, {{"a", a}, {"b", b}}, "f(ab) != f(a)f(b)"});
        return;  // one witness per map keeps reports readable
      }
}

class GroupHom {
public:
  GroupHom(GroupPtr dom, GroupPtr cod, std::vector<int> val)
      : dom_(std::move(dom)), cod_(std::move(cod)), val_(std::move(val)) {
    std::vector<Violation> v;
    scan_hom(*dom_, *cod_, val_, "hom", v);
    require(v.empty(), "not a homomorphism: " + (v.empty() ? "" : v.front().detail));
  }

  const FiniteGroup& dom() const { return *dom_; }
  const FiniteGroup& cod() const { return *cod_; }
  GroupPtr dom_ptr() const { return dom_; }
  GroupPtr cod_ptr() const { return cod_; }
  const std::vector<int>& values() const { return val_; }
  int operator()(int x) const { return val_[x]; }

  std::vector<int> kernel() const {
    std::vector<int> k;
    for (int x = 0; x < dom_->order(); ++x)
      if (val_[x] == 0) k.push_back(x);
    return k;
  }
  std::vector<int> image() const {
    std::vector<int> im = val_;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }
  bool injective() const { return kernel().size() == 1; }
  bool surjective() const { return static_cast<int>(image().size()) == cod_->order(); }

private:
  GroupPtr dom_, cod_;
  std::vector<int> val_;
};

inline GroupHom trivial_hom(GroupPtr dom, GroupPtr cod) {
  return GroupHom(dom, std::move(cod), std::vector<int>(dom->order(), 0));
}

inline GroupHom identity_hom(GroupPtr g) {
  std::vector<int> v(g->order());
  for (int i = 0; i < g->order(); ++i) v[i] = i;
  return GroupHom(g, g, std::move(v));
}

// ---------------------------------------------------------------------------
// Right actions by automorphisms
// ---------------------------------------------------------------------------

// Table of (beta, a) -> beta^a for a right action of `acting` on `acted`.
inline void scan_action(const FiniteGroup& acted, const FiniteGroup& acting,
                        const std::vector<int>& tab, const std::string& where,
                        std::vector<Violation>& out) {
  require(tab.size() == static_cast<std::size_t>(acted.order()) * acting.order(),
          where + ": action table has wrong size");
  for (int v : tab) require(0 <= v && v < acted.order(), where + ": value out of range");
  auto act = [&](int b, int a) { return tab[static_cast<std::size_t>(b) * acting.order() + a]; };
  for (int b = 0; b < acted.order(); ++b)
    if (act(b, 0) != b) {
      out.push_back({"action", where, {{"beta", b}}, "identity acts nontrivially"});
      break;
    }
  for (int a = 0; a < acting.order(); ++a) {
    // each group element must act as an automorphism
    std::vector<bool> hit(acted.order(), false);
    bool bad = false;
    for (int b = 0; b < acted.order() && !bad; ++b) {
      if (hit[act(b, a)]) bad = true;
      hit[act(b, a)] = true;
    }
    for (int b1 = 0; b1 < acted.order() && !bad; ++b1)
      for (int b2 = 0; b2 < acted.order() && !bad; ++b2)
        if (act(acted.mul(b1, b2), a) != acted.mul(act(b1, a), act(b2, a))) bad = true;
    if (bad) {
      out.push_back({"action", where, {{"a", a}}, "element does not act as an automorphism"});
      break;
    }
  }
  for (int b = 0; b < acted.order(); ++b)
    for (int a1 = 0; a1 < acting.order(); ++a1)
      for (int a2 = 0; a2 < acting.order(); ++a2)
        if (act(act(b, a1), a2) != act(b, acting.mul(a1, a2))) {
          out.push_back({"action", where,
                         {{"beta", b}, {"a", a1}, {"b", a2}},
                         "(beta^a)^b != beta^(ab)"});
          return;
        }
}

class RightAction {
public:
  RightAction(GroupPtr acted, GroupPtr acting, std::vector<int> tab)
      : acted_(std::move(acted)), acting_(std::move(acting)), tab_(std::move(tab)) {
    std::vector<Violation> v;
    scan_action(*acted_, *acting_, tab_, "action", v);
    require(v.empty(), "not a right action: " + (v.empty() ? "" : v.front().detail));
  }

  static RightAction trivial(GroupPtr acted, GroupPtr acting) {
    std::vector<int> t(static_cast<std::size_t>(acted->order()) * acting->order());
    for (int b = 0; b < acted->order(); ++b)
      for (int a = 0; a < acting->order(); ++a)
        t[static_cast<std::size_t>(b) * acting->order() + a] = b;
    return RightAction(std::move(acted), std::move(acting), std::move(t));
  }

  // beta^a = a^{-1} beta a inside g
  static RightAction conjugation(GroupPtr g) {
    std::vector<int> t(static_cast<std::size_t>(g->order()) * g->order());
    for (int b = 0; b < g->order(); ++b)
      for (int a = 0; a < g->order(); ++a)
        t[static_cast<std::size_t>(b) * g->order() + a] = g->mul(g->mul(g->inv(a), b), a);
    return RightAction(g, g, std::move(t));
  }

  const FiniteGroup& acted() const { return *acted_; }
  const FiniteGroup& acting() const { return *acting_; }
  const std::vector<int>& table() const { return tab_; }
  int operator()(int beta, int a) const {
    return tab_[static_cast<std::size_t>(beta) * acting_->order() + a];
  }

private:
  GroupPtr acted_, acting_;
  std::vector<int> tab_;
};

}  // namespace wpgl

#endif
