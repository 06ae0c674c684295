#ifndef WPGL_FINITE_GROUP_HPP
#define WPGL_FINITE_GROUP_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wpgl/common.hpp"

namespace wpgl {

// Finite group as an explicit multiplication table on 0..n-1 with 0 the
// identity. Group axioms are checked at construction, so every instance
// in circulation is a genuine group.
class FiniteGroup {
public:
  FiniteGroup(int n, std::vector<int> table, std::vector<int> generators = {})
      : n_(n), tab_(std::move(table)), gens_(std::move(generators)) {
    require(n_ >= 1, "group order must be positive");
    require(tab_.size() == static_cast<std::size_t>(n_) * n_,
            "multiplication table has wrong size");
    for (int v : tab_) require(0 <= v && v < n_, "table entry out of range");
    for (int a = 0; a < n_; ++a) {
      require(mul(0, a) == a && mul(a, 0) == a, "0 is not an identity");
    }
    // latin square
    for (int a = 0; a < n_; ++a) {
      std::vector<bool> row(n_, false), col(n_, false);
      for (int b = 0; b < n_; ++b) {
        require(!row[mul(a, b)], "row is not a permutation");
        row[mul(a, b)] = true;
        require(!col[mul(b, a)], "column is not a permutation");
        col[mul(b, a)] = true;
      }
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          require(mul(mul(a, b), c) == mul(a, mul(b, c)), "table is not associative");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) inv_[a] = b;
    for (int a = 0; a < n_; ++a) require(inv_[a] >= 0, "missing inverse");
    for (int g : gens_) require(0 <= g && g < n_, "generator out of range");
  }

  int order() const { return n_; }
  int mul(int a, int b) const { return tab_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<int>& table() const { return tab_; }
  const std::vector<int>& generators_hint() const { return gens_; }

  int pow(int a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = 0;
    while (k-- > 0) r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    int r = a, o = 1;
    while (r != 0) {
      r = mul(r, a);
      ++o;
    }
    return o;
  }

  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && tab_ == o.tab_; }
  bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

private:
  int n_;
  std::vector<int> tab_;
  std::vector<int> inv_;
  std::vector<int> gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr group_ptr(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
  require(n >= 1, "group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(t), n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          t[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup(n, std::move(t));
}

// r^i s^j with i < n, j < 2; s r s = r^{-1}; element index i + n*j.
inline FiniteGroup dihedral_group(int n) {
  require(n >= 1, "group order must be positive");
  const int m = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  auto idx = [&](int i, int j) { return i + n * j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          const int rot = ((j == 0 ? i + k : i - k) % n + n) % n;
          t[static_cast<std::size_t>(idx(i, j)) * m + idx(k, l)] = idx(rot, (j + l) % 2);
        }
  return FiniteGroup(m, std::move(t), {1, n});
}

// a^i x^j with i < 2n, j < 2; x^2 = a^n, x a x^{-1} = a^{-1}; order 4n.
// dicyclic_group(2) is the quaternion group.
inline FiniteGroup dicyclic_group(int n) {
  require(n >= 1, "group order must be positive");
  const int m = 4 * n;
  const int c = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  auto idx = [&](int i, int j) { return i + c * j; };
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < c; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = (j == 0) ? i + k : i - k + n * l;
          rot = ((rot % c) + c) % c;
          t[static_cast<std::size_t>(idx(i, j)) * m + idx(k, l)] = idx(rot, (j + l) % 2);
        }
  return FiniteGroup(m, std::move(t), {1, c});
}

inline FiniteGroup quaternion_group() { return dicyclic_group(2); }

namespace detail {
inline std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

inline FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  auto find = [&](const std::vector<int>& p) {
    const auto it = std::lower_bound(perms.begin(), perms.end(), p);
    require(it != perms.end() && *it == p, "permutation set is not closed");
    return static_cast<int>(it - perms.begin());
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(perms[a].size());
      for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = perms[a][perms[b][x]];
      t[static_cast<std::size_t>(a) * n + b] = find(prod);
    }
  return FiniteGroup(n, std::move(t));
}
}  // namespace detail

inline FiniteGroup symmetric_group(int n) {
  require(1 <= n && n <= 5, "symmetric group size out of the supported range");
  return detail::permutation_group(detail::permutations_lex(n));
}

inline FiniteGroup alternating_group(int n) {
  require(1 <= n && n <= 5, "alternating group size out of the supported range");
  std::vector<std::vector<int>> perms;
  for (auto& p : detail::permutations_lex(n))
    if (detail::even_permutation(p)) perms.push_back(p);
  return detail::permutation_group(perms);
}

// ---------------------------------------------------------------------------
// Subgroups and quotients
// ---------------------------------------------------------------------------

inline std::vector<int> closure(const FiniteGroup& g, std::vector<int> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> work = {0};
  in[0] = true;
  for (int x : gens)
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      const int p = g.mul(work[i], work[j]);
      if (!in[p]) {
        in[p] = true;
        work.push_back(p);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<bool> in(g.order(), false);
  for (int x : elems) in[x] = true;
  if (!in[0]) return false;
  for (int a : elems)
    for (int b : elems)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<bool> in(g.order(), false);
  for (int x : elems) in[x] = true;
  for (int h : elems)
    for (int a = 0; a < g.order(); ++a)
      if (!in[g.mul(g.mul(a, h), g.inv(a))]) return false;
  return true;
}

inline std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      if (g.mul(a, b) != g.mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

// A subgroup relabeled as a group of its own; elems[k] is the parent
// element of the new element k, with elems sorted so 0 stays the identity.
struct SubgroupView {
  FiniteGroup group;
  std::vector<int> elems;
};

inline SubgroupView subgroup_view(const FiniteGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  require(is_subgroup(g, elems), "element set is not a subgroup");
  const int n = static_cast<int>(elems.size());
  std::vector<int> pos(g.order(), -1);
  for (int k = 0; k < n; ++k) pos[elems[k]] = k;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = pos[g.mul(elems[a], elems[b])];
  return {FiniteGroup(n, std::move(t)), std::move(elems)};
}

// Quotient by a normal subgroup with canonical minimal coset
// representatives; cosets are numbered in order of their smallest element,
// so the identity coset is 0.
struct QuotientView {
  FiniteGroup group;
  std::vector<int> proj;  // parent element -> coset index
  std::vector<int> reps;  // coset index -> minimal representative
};

inline QuotientView quotient_view(const FiniteGroup& g, const std::vector<int>& normal) {
  require(is_subgroup(g, normal), "element set is not a subgroup");
  require(is_normal(g, normal), "subgroup is not normal");
  std::vector<int> proj(g.order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (proj[a] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h : normal) proj[g.mul(a, h)] = c;
  }
  const int n = static_cast<int>(reps.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = proj[g.mul(reps[a], reps[b])];
  return {FiniteGroup(n, std::move(t)), std::move(proj), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Homomorphism search
// ---------------------------------------------------------------------------

inline std::vector<int> minimal_generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> cur = {0};
  while (static_cast<int>(cur.size()) < g.order()) {
    int pick = -1;
    std::vector<bool> in(g.order(), false);
    for (int x : cur) in[x] = true;
    for (int a = 0; a < g.order(); ++a)
      if (!in[a]) {
        pick = a;
        break;
      }
    gens.push_back(pick);
    cur = closure(g, gens);
  }
  return gens;
}

// Complete backtracking over images of a minimal generating sequence.
// visit() receives each homomorphism's full value table and may return
// true to stop the search. allowed() prunes images pointwise.
template <class Visit>
void for_each_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                  const std::function<bool(int, int)>& allowed, Visit&& visit) {
  const std::vector<int> gens = minimal_generating_sequence(dom);
  // BFS word order: every element is some earlier element times a generator
  std::vector<int> order = {0}, parent(dom.order(), -1), via(dom.order(), -1);
  std::vector<bool> seen(dom.order(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const int nxt = dom.mul(order[i], gens[j]);
      if (!seen[nxt]) {
        seen[nxt] = true;
        parent[nxt] = order[i];
        via[nxt] = static_cast<int>(j);
        order.push_back(nxt);
      }
    }

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const int o = dom.element_order(gens[j]);
    for (int y = 0; y < cod.order(); ++y)
      if (o % cod.element_order(y) == 0 && (!allowed || allowed(gens[j], y)))
        candidates[j].push_back(y);
  }

  std::vector<int> img(gens.size(), -1);
  std::vector<int> val(dom.order(), -1);
  bool stop = false;

  auto attempt = [&]() {
    val.assign(dom.order(), -1);
    val[0] = 0;
    if (allowed && !allowed(0, 0)) return;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const int x = order[i];
      val[x] = cod.mul(val[parent[x]], img[via[x]]);
      if (allowed && !allowed(x, val[x])) return;
    }
    for (int a = 0; a < dom.order(); ++a)
      for (int b = 0; b < dom.order(); ++b)
        if (val[dom.mul(a, b)] != cod.mul(val[a], val[b])) return;
    if (visit(val)) stop = true;
  };

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (stop) return;
    if (j == gens.size()) {
      attempt();
      return;
    }
    for (int y : candidates[j]) {
      img[j] = y;
      self(self, j + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

inline std::vector<std::vector<int>> all_homs(
    const FiniteGroup& dom, const FiniteGroup& cod,
    const std::function<bool(int, int)>& allowed = {}) {
  std::vector<std::vector<int>> out;
  for_each_hom(dom, cod, allowed, [&](const std::vector<int>& v) {
    out.push_back(v);
    return false;
  });
  return out;
}

inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                        const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::optional<std::vector<int>> found;
  std::function<bool(int, int)> ord_match = [&](int x, int y) {
    return a.element_order(x) == b.element_order(y);
  };
  for_each_hom(a, b, ord_match, [&](const std::vector<int>& v) {
    std::vector<bool> hit(b.order(), false);
    for (int y : v) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    found = v;
    return true;
  });
  return found;
}

namespace detail {
// the backtracking search is complete but exponential in the generator
// count; refuse isomorphism attempts whose candidate space is too large
inline bool iso_search_feasible(const FiniteGroup& a, const FiniteGroup& b,
                                double budget = 2e6) {
  double space = 1;
  for (int gen : minimal_generating_sequence(a)) {
    const int o = a.element_order(gen);
    int candidates = 0;
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == o) ++candidates;
    space *= std::max(candidates, 1);
    if (space > budget) return false;
  }
  return true;
}
}  // namespace detail

// Small-order classifier used for human-readable reports.
inline std::string structure_name(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 1) return "1";
  if (g.is_abelian()) {
    // invariant factor chains d_1 | d_2 | ... with product n, longest first
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxdiv) -> void {
      if (rest == 1) {
        chains.push_back(cur);
        return;
      }
      for (int d = 2; d <= std::min(rest, maxdiv); ++d)
        if (rest % d == 0) {
          cur.push_back(d);
          self(self, rest / d, d);
          cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(chains.begin(), chains.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    for (const auto& chain : chains) {
      FiniteGroup cand = cyclic_group(chain[0]);
      for (std::size_t i = 1; i < chain.size(); ++i)
        cand = direct_product(cand, cyclic_group(chain[i]));
      if (!detail::iso_search_feasible(g, cand)) continue;
      if (find_isomorphism(g, cand)) {
        std::string name;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
          if (!name.empty()) name += "x";
          name += "C" + std::to_string(*it);
        }
        return name;
      }
    }
  } else {
    auto matches = [&](const FiniteGroup& cand) {
      return detail::iso_search_feasible(g, cand) && find_isomorphism(g, cand);
    };
    if (n == 6) return "S3";
    if (n == 24 && matches(symmetric_group(4))) return "S4";
    if (n == 12 && matches(alternating_group(4))) return "A4";
    if (n % 4 == 0 && matches(dicyclic_group(n / 4)))
      return n == 8 ? "Q8" : "Dic" + std::to_string(n / 4);
    if (n % 2 == 0 && matches(dihedral_group(n / 2)))
      return "D" + std::to_string(n / 2);
  }
  return "G" + std::to_string(n);
}

}  // namespace wpgl

#endif
