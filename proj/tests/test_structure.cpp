#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>
#include <set>

#include "wpgl/structure.hpp"

using namespace wpgl;

TEST_CASE("splitting matrices for the worked examples") {
  const IntMatrix m23 = splitting_matrix({2, 3});
  CHECK(m23.n == 2);
  CHECK(m23.at(0, 0) == 2);
  CHECK(m23.at(0, 1) == 1);
  CHECK(m23.at(1, 0) == 3);
  CHECK(m23.at(1, 1) == 2);
  CHECK(m23.det() == 1);

  const IntMatrix m1k = splitting_matrix({1, 7});
  CHECK(m1k.at(0, 0) == 1);
  CHECK(m1k.at(0, 1) == 0);
  CHECK(m1k.at(1, 0) == 7);
  CHECK(m1k.at(1, 1) == 1);

  const IntMatrix m = splitting_matrix({6, 10, 15});
  CHECK(m.det() == 1);
  CHECK(m.at(0, 0) == 6);
  CHECK(m.at(1, 0) == 10);
  CHECK(m.at(2, 0) == 15);

  CHECK_THROWS_AS(splitting_matrix({4, 4}), Error);
}

TEST_CASE("splitting matrices on random distinct tuples") {
  std::mt19937_64 rng(211);
  for (int it = 0; it < 100; ++it) {
    const int t = 2 + static_cast<int>(rng() % 4);
    std::set<long> ws;
    while (static_cast<int>(ws.size()) < t)
      ws.insert(1 + static_cast<long>(rng() % 50));
    std::vector<long> w(ws.begin(), ws.end());
    const IntMatrix m = splitting_matrix(w);
    CHECK(m.det() == 1);
    long g = 0;
    for (long x : w) g = std::gcd(g, x);
    for (int i = 0; i < t; ++i) CHECK(m.at(i, 0) == w[i] / g);
  }
}

TEST_CASE("component group report") {
  const Pi0Report torus = pi0_report(WeightSignature({2, 3}));
  CHECK(torus.cls == Pi0Class::kSplitTorus);
  CHECK(torus.unipotent_dims == std::vector<long long>{0, 0});
  CHECK(torus.reductive_ranks == std::vector<int>{1, 1});
  CHECK(torus.pi1 == 1);
  REQUIRE(torus.splitting.has_value());
  CHECK(torus.splitting->det() == 1);

  const Pi0Report block = pi0_report(WeightSignature({5, 5}));
  CHECK(block.cls == Pi0Class::kProjectiveBlock);
  CHECK(block.block_rank == 2);
  CHECK(block.pi1 == 5);
  CHECK(block.unipotent_dims == std::vector<long long>{0});

  const Pi0Report chain = pi0_report(WeightSignature({1, 2, 3}));
  CHECK(chain.cls == Pi0Class::kSplitTorus);
  CHECK(chain.k == std::vector<long long>{0, 1, 2});
  CHECK(chain.unipotent_dims == std::vector<long long>{0, 1, 2});
  CHECK(chain.pi1 == 1);

  const Pi0Report triple = pi0_report(WeightSignature({3, 3, 3}));
  CHECK(triple.cls == Pi0Class::kProjectiveBlock);
  CHECK(triple.block_rank == 3);
  CHECK(triple.pi1 == 3);

  const Pi0Report mixed = pi0_report(WeightSignature({1, 1, 2}));
  CHECK(mixed.cls == Pi0Class::kMixedCokernel);
  CHECK(mixed.reductive_ranks == std::vector<int>{2, 1});
  CHECK(mixed.unipotent_dims == std::vector<long long>{0, 3});
  CHECK_FALSE(mixed.splitting.has_value());
}

TEST_CASE("k is zero at the first level for any signature") {
  std::mt19937_64 rng(223);
  for (int it = 0; it < 30; ++it) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<long> w;
    for (int i = 0; i < n; ++i) w.push_back(1 + static_cast<long>(rng() % 10));
    CHECK(pi0_report(WeightSignature(w)).k[0] == 0);
  }
}

TEST_CASE("torus exponent tables for the worked examples") {
  const auto r123_2 = unipotent_torus_exponents(WeightSignature({1, 2, 3}), 2);
  REQUIRE(r123_2.size() == 1);
  CHECK(r123_2[0] == std::vector<long>{-2, 1, 0});

  const auto r124_3 = unipotent_torus_exponents(WeightSignature({1, 2, 4}), 3);
  REQUIRE(r124_3.size() == 3);
  CHECK(r124_3[0] == std::vector<long>{-4, 0, 1});
  CHECK(r124_3[1] == std::vector<long>{-2, -1, 1});
  CHECK(r124_3[2] == std::vector<long>{0, -2, 1});

  const auto r24 = unipotent_torus_exponents(WeightSignature({2, 4}), 2);
  REQUIRE(r24.size() == 1);
  CHECK(r24[0] == std::vector<long>{-2, 1});
}
