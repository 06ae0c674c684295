#ifndef WPGL_EXTENSION_HPP
#define WPGL_EXTENSION_HPP

#include <optional>
#include <utility>

#include "wpgl/group_maps.hpp"

namespace wpgl {

// Central extension 1 -> C -> E -> H -> 1 given by an embedding table and
// a projection table.
struct CentralExtension {
  GroupPtr sub, total, quot;  // C, E, H
  std::vector<int> embed;     // C -> E
  std::vector<int> proj;      // E -> H
};

inline CentralExtension product_extension(GroupPtr c, GroupPtr h) {
  const FiniteGroup e = direct_product(*c, *h);
  std::vector<int> embed(c->order());
  for (int x = 0; x < c->order(); ++x) embed[x] = x * h->order();
  std::vector<int> proj(e.order());
  for (int x = 0; x < e.order(); ++x) proj[x] = x % h->order();
  return CentralExtension{std::move(c), group_ptr(e), std::move(h), std::move(embed),
                          std::move(proj)};
}

inline ValidationReport check_central_extension(const CentralExtension& ext) {
  require(ext.sub && ext.total && ext.quot, "extension is missing a group");
  ValidationReport rep;
  scan_hom(*ext.sub, *ext.total, ext.embed, "embed", rep.violations);
  scan_hom(*ext.total, *ext.quot, ext.proj, "proj", rep.violations);
  if (!rep.valid()) return rep;

  std::vector<bool> in_image(ext.total->order(), false);
  for (int c = 0; c < ext.sub->order(); ++c) {
    for (int c2 = c + 1; c2 < ext.sub->order(); ++c2)
      if (ext.embed[c] == ext.embed[c2]) {
        rep.violations.push_back(
            {"extension", "embed", {{"c", c}, {"c2", c2}}, "embedding is not injective"});
        return rep;
      }
    in_image[ext.embed[c]] = true;
  }
  for (int c = 0; c < ext.sub->order(); ++c)
    for (int x = 0; x < ext.total->order(); ++x)
      if (ext.total->mul(ext.embed[c], x) != ext.total->mul(x, ext.embed[c])) {
        rep.violations.push_back(
            {"extension", "embed", {{"c", c}, {"x", x}}, "image is not central"});
        return rep;
      }
  std::vector<bool> hit(ext.quot->order(), false);
  for (int x = 0; x < ext.total->order(); ++x) hit[ext.proj[x]] = true;
  for (int h = 0; h < ext.quot->order(); ++h)
    if (!hit[h]) {
      rep.violations.push_back(
          {"extension", "proj", {{"h", h}}, "projection is not surjective"});
      return rep;
    }
  for (int x = 0; x < ext.total->order(); ++x)
    if ((ext.proj[x] == 0) != in_image[x]) {
      rep.violations.push_back(
          {"extension", "proj", {{"x", x}}, "kernel of proj differs from image of embed"});
      return rep;
    }
  return rep;
}

inline void require_valid(const CentralExtension& ext) {
  require(check_central_extension(ext).valid(), "invalid central extension");
}

// A homomorphic section of the projection, or definitive absence. The
// backtracking over generator images is complete: every homomorphism is
// determined by its values on a generating sequence, and all fiber
// choices are tried.
inline std::optional<std::vector<int>> split_section(const CentralExtension& ext) {
  require_valid(ext);
  std::optional<std::vector<int>> found;
  std::function<bool(int, int)> in_fiber = [&](int h, int e) {
    return ext.proj[e] == h;
  };
  for_each_hom(*ext.quot, *ext.total, in_fiber, [&](const std::vector<int>& v) {
    found = v;
    return true;
  });
  return found;
}

}  // namespace wpgl

#endif
