#include <catch2/catch_amalgamated.hpp>

#include "wpgl/extension.hpp"

using namespace wpgl;

namespace {
// 1 -> C2 -> C4 -> C2 -> 1
CentralExtension c4_over_c2() {
  CentralExtension ext;
  ext.sub = group_ptr(cyclic_group(2));
  ext.total = group_ptr(cyclic_group(4));
  ext.quot = group_ptr(cyclic_group(2));
  ext.embed = {0, 2};
  ext.proj = {0, 1, 0, 1};
  return ext;
}

// exhaustive oracle: try every set-map section of proj
bool brute_force_split(const CentralExtension& ext) {
  const FiniteGroup& e = *ext.total;
  const FiniteGroup& h = *ext.quot;
  std::vector<std::vector<int>> fibers(h.order());
  for (int x = 0; x < e.order(); ++x) fibers[ext.proj[x]].push_back(x);
  std::vector<int> pick(h.order(), 0);
  for (;;) {
    std::vector<int> s(h.order());
    for (int v = 0; v < h.order(); ++v) s[v] = fibers[v][pick[v]];
    bool hom = s[0] == 0;
    for (int a = 0; a < h.order() && hom; ++a)
      for (int b = 0; b < h.order() && hom; ++b)
        if (s[h.mul(a, b)] != e.mul(s[a], s[b])) hom = false;
    if (hom) return true;
    int i = 0;
    while (i < h.order() && ++pick[i] == static_cast<int>(fibers[i].size())) {
      pick[i] = 0;
      ++i;
    }
    if (i == h.order()) return false;
  }
}
}  // namespace

TEST_CASE("extension validation") {
  CHECK(check_central_extension(c4_over_c2()).valid());

  // embedding a non-central subgroup is rejected
  CentralExtension bad;
  bad.sub = group_ptr(cyclic_group(2));
  bad.total = group_ptr(symmetric_group(3));
  bad.quot = group_ptr(cyclic_group(3));
  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (bad.total->element_order(x) == 2) {
      transposition = x;
      break;
    }
  bad.embed = {0, transposition};
  bad.proj = std::vector<int>(6, 0);
  const auto rep = check_central_extension(bad);
  REQUIRE_FALSE(rep.valid());
  CHECK(rep.violations.front().detail == "image is not central");
}

TEST_CASE("the cyclic double cover does not split") {
  CHECK_FALSE(split_section(c4_over_c2()).has_value());
}

TEST_CASE("product extensions split") {
  for (auto h : {cyclic_group(2), cyclic_group(3), dihedral_group(3),
                 direct_product(cyclic_group(2), cyclic_group(2))}) {
    const CentralExtension ext =
        product_extension(group_ptr(cyclic_group(2)), group_ptr(h));
    REQUIRE(check_central_extension(ext).valid());
    const auto s = split_section(ext);
    REQUIRE(s.has_value());
    for (int v = 0; v < ext.quot->order(); ++v) CHECK(ext.proj[(*s)[v]] == v);
  }
}

TEST_CASE("generator search agrees with the exhaustive oracle") {
  std::vector<CentralExtension> corpus;
  corpus.push_back(c4_over_c2());
  corpus.push_back(product_extension(group_ptr(cyclic_group(2)),
                                     group_ptr(cyclic_group(2))));
  corpus.push_back(product_extension(group_ptr(cyclic_group(4)),
                                     group_ptr(cyclic_group(4))));
  corpus.push_back(product_extension(group_ptr(cyclic_group(2)),
                                     group_ptr(dihedral_group(4))));

  // 1 -> C2 -> C8 -> C4 -> 1 (non-split)
  CentralExtension c8;
  c8.sub = group_ptr(cyclic_group(2));
  c8.total = group_ptr(cyclic_group(8));
  c8.quot = group_ptr(cyclic_group(4));
  c8.embed = {0, 4};
  c8.proj = {0, 1, 2, 3, 0, 1, 2, 3};
  corpus.push_back(c8);

  // 1 -> C2 -> Q8 -> C2xC2 -> 1 (non-split)
  CentralExtension q;
  q.sub = group_ptr(cyclic_group(2));
  q.total = group_ptr(quaternion_group());
  const auto z = center(*q.total);
  REQUIRE(z.size() == 2);
  q.embed = {0, z[1]};
  const QuotientView qv = quotient_view(*q.total, z);
  q.quot = group_ptr(qv.group);
  q.proj = qv.proj;
  corpus.push_back(q);

  // 1 -> C2 -> D4 -> C2xC2 -> 1 (non-split: both Klein subgroups contain
  // the center)
  CentralExtension d;
  d.sub = group_ptr(cyclic_group(2));
  d.total = group_ptr(dihedral_group(4));
  const auto zd = center(*d.total);
  REQUIRE(zd.size() == 2);
  d.embed = {0, zd[1]};
  const QuotientView dv = quotient_view(*d.total, zd);
  d.quot = group_ptr(dv.group);
  d.proj = dv.proj;
  corpus.push_back(d);

  // 1 -> C2 -> C4xC2 -> C2xC2 -> 1 (non-split)
  CentralExtension m;
  m.sub = group_ptr(cyclic_group(2));
  m.total = group_ptr(direct_product(cyclic_group(4), cyclic_group(2)));
  m.embed = {0, 4};  // (2, 0) in C4xC2 indexing a*2+b
  const QuotientView mv = quotient_view(*m.total, {0, 4});
  m.quot = group_ptr(mv.group);
  m.proj = mv.proj;
  corpus.push_back(m);

  int split_count = 0;
  for (const auto& ext : corpus) {
    REQUIRE(check_central_extension(ext).valid());
    const auto s = split_section(ext);
    CHECK(s.has_value() == brute_force_split(ext));
    if (s) {
      ++split_count;
      // the section really is a homomorphic section
      for (int a = 0; a < ext.quot->order(); ++a) {
        CHECK(ext.proj[(*s)[a]] == a);
        for (int b = 0; b < ext.quot->order(); ++b)
          CHECK((*s)[ext.quot->mul(a, b)] == ext.total->mul((*s)[a], (*s)[b]));
      }
    }
  }
  CHECK(split_count == 3);  // exactly the three product extensions
}
