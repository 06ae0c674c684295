#ifndef WPGL_BUTTERFLY_HPP
#define WPGL_BUTTERFLY_HPP

#include <optional>
#include <utility>

#include "wpgl/crossed_module.hpp"
#include "wpgl/extension.hpp"
#include "wpgl/weight_signature.hpp"

namespace wpgl {

// Butterfly from [psi: H1 -> H0] to [phi: G1 -> G0]: a center group E with
// kappa: H1 -> E, iota: G1 -> E, sigma: E -> H0, rho: E -> G0 such that
//   B0: sigma o kappa = psi and rho o iota = phi (the diagram commutes),
//   B1: both diagonal sequences are complexes,
//   B2: the NE-SW sequence G1 -> E -> H0 is short exact,
//   B3: conjugation in E realizes both actions.
struct Butterfly {
  CrossedModule src;  // H
  CrossedModule dst;  // G
  GroupPtr e;
  std::vector<int> kappa, iota, sigma, rho;
};

inline void check_shapes(const Butterfly& b) {
  check_shapes(b.src);
  check_shapes(b.dst);
  require(b.e != nullptr, "butterfly is missing the center group");
  require(b.kappa.size() == static_cast<std::size_t>(b.src.g1->order()),
          "kappa table has wrong size");
  require(b.iota.size() == static_cast<std::size_t>(b.dst.g1->order()),
          "iota table has wrong size");
  require(b.sigma.size() == static_cast<std::size_t>(b.e->order()),
          "sigma table has wrong size");
  require(b.rho.size() == static_cast<std::size_t>(b.e->order()),
          "rho table has wrong size");
  for (int v : b.kappa) require(0 <= v && v < b.e->order(), "kappa value out of range");
  for (int v : b.iota) require(0 <= v && v < b.e->order(), "iota value out of range");
  for (int v : b.sigma)
    require(0 <= v && v < b.src.g0->order(), "sigma value out of range");
  for (int v : b.rho) require(0 <= v && v < b.dst.g0->order(), "rho value out of range");
}

inline ValidationReport check_butterfly(const Butterfly& b) {
  check_shapes(b);
  ValidationReport rep;

  auto sub = check_crossed_module(b.src, "source");
  rep.violations.insert(rep.violations.end(), sub.violations.begin(),
                        sub.violations.end());
  sub = check_crossed_module(b.dst, "target");
  rep.violations.insert(rep.violations.end(), sub.violations.begin(),
                        sub.violations.end());

  scan_hom(*b.src.g1, *b.e, b.kappa, "kappa", rep.violations);
  scan_hom(*b.dst.g1, *b.e, b.iota, "iota", rep.violations);
  scan_hom(*b.e, *b.src.g0, b.sigma, "sigma", rep.violations);
  scan_hom(*b.e, *b.dst.g0, b.rho, "rho", rep.violations);

  const FiniteGroup& e = *b.e;

  // B0: the wings commute with the boundaries
  for (int beta = 0; beta < b.src.g1->order(); ++beta)
    if (b.sigma[b.kappa[beta]] != b.src.bnd(beta)) {
      rep.violations.push_back(
          {"B0", "kappa", {{"beta", beta}}, "sigma o kappa != psi"});
      break;
    }
  for (int alpha = 0; alpha < b.dst.g1->order(); ++alpha)
    if (b.rho[b.iota[alpha]] != b.dst.bnd(alpha)) {
      rep.violations.push_back({"B0", "iota", {{"alpha", alpha}}, "rho o iota != phi"});
      break;
    }

  // B1: both diagonals are complexes
  for (int beta = 0; beta < b.src.g1->order(); ++beta)
    if (b.rho[b.kappa[beta]] != 0) {
      rep.violations.push_back(
          {"B1", "kappa", {{"beta", beta}}, "rho o kappa is not trivial"});
      break;
    }
  for (int alpha = 0; alpha < b.dst.g1->order(); ++alpha)
    if (b.sigma[b.iota[alpha]] != 0) {
      rep.violations.push_back(
          {"B1", "iota", {{"alpha", alpha}}, "sigma o iota is not trivial"});
      break;
    }

  // B2: NE-SW short exact
  for (int a1 = 0; a1 < b.dst.g1->order(); ++a1) {
    bool stop = false;
    for (int a2 = a1 + 1; a2 < b.dst.g1->order(); ++a2)
      if (b.iota[a1] == b.iota[a2]) {
        rep.violations.push_back(
            {"B2", "iota", {{"alpha", a1}, {"alpha2", a2}}, "iota is not injective"});
        stop = true;
        break;
      }
    if (stop) break;
  }
  {
    std::vector<bool> hit(b.src.g0->order(), false);
    for (int x = 0; x < e.order(); ++x) hit[b.sigma[x]] = true;
    for (int h = 0; h < b.src.g0->order(); ++h)
      if (!hit[h]) {
        rep.violations.push_back({"B2", "sigma", {{"h", h}}, "sigma is not surjective"});
        break;
      }
  }
  {
    std::vector<bool> in_image(e.order(), false);
    for (int alpha = 0; alpha < b.dst.g1->order(); ++alpha) in_image[b.iota[alpha]] = true;
    for (int x = 0; x < e.order(); ++x)
      if ((b.sigma[x] == 0) != in_image[x]) {
        rep.violations.push_back(
            {"B2", "sigma", {{"x", x}}, "image of iota differs from kernel of sigma"});
        break;
      }
  }

  // B3: compatibility of conjugation with both actions
  [&] {
    for (int x = 0; x < e.order(); ++x)
      for (int alpha = 0; alpha < b.dst.g1->order(); ++alpha)
        if (b.iota[b.dst.act(alpha, b.rho[x])] !=
            e.mul(e.mul(e.inv(x), b.iota[alpha]), x)) {
          rep.violations.push_back({"B3", "iota", {{"x", x}, {"alpha", alpha}},
                                    "iota(alpha^rho(x)) != x^-1 iota(alpha) x"});
          return;
        }
  }();
  [&] {
    for (int x = 0; x < e.order(); ++x)
      for (int beta = 0; beta < b.src.g1->order(); ++beta)
        if (b.kappa[b.src.act(beta, b.sigma[x])] !=
            e.mul(e.mul(e.inv(x), b.kappa[beta]), x)) {
          rep.violations.push_back({"B3", "kappa", {{"x", x}, {"beta", beta}},
                                    "kappa(beta^sigma(x)) != x^-1 kappa(beta) x"});
          return;
        }
  }();
  return rep;
}

inline void require_valid(const Butterfly& b) {
  const ValidationReport rep = check_butterfly(b);
  require(rep.valid(), "invalid butterfly" +
                           (rep.violations.empty()
                                ? std::string()
                                : ": " + rep.violations.front().axiom + " fails at " +
                                      rep.violations.front().where));
}

// Builds the butterfly of a strict morphism (f1, f0) on E = G1 x| H0,
// where H0 acts on G1 through f0 and the target's action:
//   (a1, h1)(a2, h2) = (a1 * a2^{f0(h1^-1)}, h1 h2),
//   kappa(beta) = (f1(beta)^-1, psi(beta)),  iota(alpha) = (alpha, 1),
//   sigma = projection,  rho(alpha, h) = phi(alpha) f0(h).
// The construction is trusted only as far as check_butterfly accepts it;
// the checker runs on every call.
inline Butterfly from_strict_morphism(const CrossedModule& src, const CrossedModule& dst,
                                      const std::vector<int>& f1,
                                      const std::vector<int>& f0) {
  require_valid(src);
  require_valid(dst);
  require(f1.size() == static_cast<std::size_t>(src.g1->order()) &&
              f0.size() == static_cast<std::size_t>(src.g0->order()),
          "morphism tables have wrong size");
  require(is_strict_morphism(src, dst, f1, f0), "not a strict morphism");

  const FiniteGroup& g1 = *dst.g1;
  const FiniteGroup& h0 = *src.g0;
  const int n = g1.order() * h0.order();
  auto idx = [&](int alpha, int h) { return alpha * h0.order() + h; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < g1.order(); ++a1)
    for (int h1 = 0; h1 < h0.order(); ++h1)
      for (int a2 = 0; a2 < g1.order(); ++a2)
        for (int h2 = 0; h2 < h0.order(); ++h2) {
          const int twisted = dst.act(a2, f0[h0.inv(h1)]);
          table[static_cast<std::size_t>(idx(a1, h1)) * n + idx(a2, h2)] =
              idx(g1.mul(a1, twisted), h0.mul(h1, h2));
        }
  GroupPtr e = group_ptr(FiniteGroup(n, std::move(table)));

  Butterfly b;
  b.src = src;
  b.dst = dst;
  b.e = e;
  b.kappa.resize(src.g1->order());
  for (int beta = 0; beta < src.g1->order(); ++beta)
    b.kappa[beta] = idx(g1.inv(f1[beta]), src.bnd(beta));
  b.iota.resize(g1.order());
  for (int alpha = 0; alpha < g1.order(); ++alpha) b.iota[alpha] = idx(alpha, 0);
  b.sigma.resize(n);
  b.rho.resize(n);
  for (int alpha = 0; alpha < g1.order(); ++alpha)
    for (int h = 0; h < h0.order(); ++h) {
      b.sigma[idx(alpha, h)] = h;
      b.rho[idx(alpha, h)] = dst.g0->mul(dst.bnd(alpha), f0[h]);
    }
  require_valid(b);
  return b;
}

struct StrictificationWitness {
  std::vector<int> section;  // H0 -> E, homomorphic section of sigma
  std::vector<int> f1;       // induced H1 -> G1
  std::vector<int> f0;       // induced H0 -> G0
};

// Searches for a homomorphic section of sigma that induces a strict
// morphism: f0 = rho o s and iota(f1(beta)) = s(psi(beta)) kappa(beta)^-1.
// The search over generator images is complete, so absence is definitive.
inline std::optional<StrictificationWitness> is_strictifiable(const Butterfly& b) {
  require_valid(b);
  const FiniteGroup& e = *b.e;
  std::vector<int> iota_inv(e.order(), -1);
  for (int alpha = 0; alpha < b.dst.g1->order(); ++alpha) iota_inv[b.iota[alpha]] = alpha;

  std::optional<StrictificationWitness> found;
  std::function<bool(int, int)> in_fiber = [&](int h, int x) { return b.sigma[x] == h; };
  for_each_hom(*b.src.g0, e, in_fiber, [&](const std::vector<int>& s) {
    StrictificationWitness w;
    w.section = s;
    w.f0.resize(b.src.g0->order());
    for (int h = 0; h < b.src.g0->order(); ++h) w.f0[h] = b.rho[s[h]];
    w.f1.resize(b.src.g1->order());
    for (int beta = 0; beta < b.src.g1->order(); ++beta) {
      const int x = e.mul(s[b.src.bnd(beta)], e.inv(b.kappa[beta]));
      if (iota_inv[x] < 0) return false;  // not in the kernel wing
      w.f1[beta] = iota_inv[x];
    }
    if (!is_strict_morphism(b.src, b.dst, w.f1, w.f0)) return false;
    found = std::move(w);
    return true;
  });
  return found;
}

// Group-theoretic shadows of the quotient 2-stack: the gerbe bands and the
// two stages of approximation.
struct QuotientInvariants {
  SubgroupView ker_kappa;    // subgroup of H1
  QuotientView coker_kappa;  // E / im(kappa)
  SubgroupView im_rho;       // subgroup of G0
  QuotientView middle;       // ker(rho) / im(kappa), inside ker(rho) labels
  bool one_stack = false;      // kappa injective
  bool orbifold_type = false;  // additionally middle trivial
};

inline QuotientInvariants quotient_invariants(const Butterfly& b) {
  require_valid(b);

  std::vector<int> ker_k;
  for (int beta = 0; beta < b.src.g1->order(); ++beta)
    if (b.kappa[beta] == 0) ker_k.push_back(beta);
  SubgroupView ker_kappa = subgroup_view(*b.src.g1, ker_k);

  std::vector<int> im_k = b.kappa;
  std::sort(im_k.begin(), im_k.end());
  im_k.erase(std::unique(im_k.begin(), im_k.end()), im_k.end());
  // B3 forces normality; recomputed directly rather than trusted
  require(is_normal(*b.e, im_k), "image of kappa is not normal");
  QuotientView coker_kappa = quotient_view(*b.e, im_k);

  std::vector<int> im_r = b.rho;
  std::sort(im_r.begin(), im_r.end());
  im_r.erase(std::unique(im_r.begin(), im_r.end()), im_r.end());
  SubgroupView im_rho = subgroup_view(*b.dst.g0, im_r);

  std::vector<int> ker_r;
  for (int x = 0; x < b.e->order(); ++x)
    if (b.rho[x] == 0) ker_r.push_back(x);
  const SubgroupView kr = subgroup_view(*b.e, ker_r);
  std::vector<int> im_k_in_kr;
  for (int x : im_k) {
    const auto it = std::lower_bound(kr.elems.begin(), kr.elems.end(), x);
    require(it != kr.elems.end() && *it == x, "image of kappa is not inside ker rho");
    im_k_in_kr.push_back(static_cast<int>(it - kr.elems.begin()));
  }
  QuotientView middle = quotient_view(kr.group, im_k_in_kr);

  const bool one_stack = ker_kappa.group.order() == 1;
  const bool orbifold = one_stack && middle.group.order() == 1;
  return QuotientInvariants{std::move(ker_kappa), std::move(coker_kappa),
                            std::move(im_rho), std::move(middle), one_stack, orbifold};
}

// Morphisms of butterflies are isomorphisms of the center commuting with
// all four wings; tested by exhaustive search at small order.
inline std::optional<std::vector<int>> butterfly_isomorphism(const Butterfly& a,
                                                             const Butterfly& b) {
  require(a.src.g1->order() == b.src.g1->order() &&
              a.src.g0->order() == b.src.g0->order() &&
              a.dst.g1->order() == b.dst.g1->order() &&
              a.dst.g0->order() == b.dst.g0->order(),
          "butterflies are not between matching crossed modules");
  if (a.e->order() != b.e->order()) return std::nullopt;
  std::optional<std::vector<int>> found;
  std::function<bool(int, int)> fibers = [&](int x, int y) {
    return a.sigma[x] == b.sigma[y] && a.rho[x] == b.rho[y];
  };
  for_each_hom(*a.e, *b.e, fibers, [&](const std::vector<int>& f) {
    std::vector<bool> hit(b.e->order(), false);
    for (int y : f) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    for (int beta = 0; beta < a.src.g1->order(); ++beta)
      if (f[a.kappa[beta]] != b.kappa[beta]) return false;
    for (int alpha = 0; alpha < a.dst.g1->order(); ++alpha)
      if (f[a.iota[alpha]] != b.iota[alpha]) return false;
    found = f;
    return true;
  });
  return found;
}

// Weight arithmetic of dividing a weighted projective signature by a
// subgroup of the generic band: every weight divided by a, which must
// divide the gcd.
inline WeightSignature weight_division_quotient(const WeightSignature& sig, long a) {
  require(a >= 1, "divisor must be positive");
  require(sig.gcd_weights() % a == 0, "divisor does not divide the weight gcd");
  std::vector<long> w;
  for (long n : sig.raw()) w.push_back(n / a);
  return WeightSignature(w);
}

}  // namespace wpgl

#endif
