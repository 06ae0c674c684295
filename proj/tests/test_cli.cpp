#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wpgl/cli.hpp"

using namespace wpgl;
using namespace wpgl::cli;

namespace {
Json c4_butterfly_json() {
  Butterfly b;
  b.src = discrete_module(group_ptr(cyclic_group(2)));
  b.dst = shifted_module(group_ptr(cyclic_group(2)));
  b.e = group_ptr(cyclic_group(4));
  b.kappa = {0};
  b.iota = {0, 2};
  b.sigma = {0, 1, 0, 1};
  b.rho = {0, 0, 0, 0};
  return butterfly_to_json(b);
}

Json identity_map_json(const std::vector<long>& weights) {
  const RationalField q;
  const WeightSignature sig(weights);
  return endomorphism_to_json(Endomorphism<RationalField>::identity(sig, q));
}

std::string run_binary(const std::string& args) {
  const std::string out_file = "/tmp/wpgl_cli_test_out.txt";
  const std::string cmd = std::string(WPGL_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return std::to_string(WEXITSTATUS(rc)) + "|" + ss.str();
}
}  // namespace

TEST_CASE("counts command") {
  const auto r = run_counts({1, 2, 3});
  CHECK(r.exit_code == 0);
  CHECK(r.payload["k"] == Json::array({0, 1, 2}));
  CHECK(r.payload["pi1_order"] == 1);

  const auto blocks = run_counts({5, 5});
  CHECK(blocks.payload["pi0"]["class"] == "projective-block");
  CHECK(blocks.payload["pi0"]["block_rank"] == 2);
  CHECK(blocks.payload["pi1_order"] == 5);

  const auto pair = run_counts({2, 4});
  CHECK(pair.payload["pi1_order"] == 2);
  CHECK(pair.payload["unipotent_dims"] == Json::array({0, 1}));

  CHECK_THROWS_AS(run_counts({4}), Error);
  CHECK_THROWS_AS(parse_weights("1,x"), Error);
}

TEST_CASE("sections command") {
  CHECK(run_sections({1, 1}, 3, false).payload["count"] == 4);
  CHECK(run_sections({2, 3}, 1, false).payload["count"] == 0);
  CHECK(run_sections({2, 3}, 0, false).payload["count"] == 1);
  const auto upto = run_sections({1, 1}, 10, true);
  CHECK(upto.exit_code == 0);
  CHECK(upto.payload["series_match"] == true);
  CHECK(upto.payload["counts"].size() == 11);
  CHECK(upto.payload["counts"][10] == 11);
}

TEST_CASE("decompose command") {
  const auto id = run_decompose({1, 2}, "q", identity_map_json({1, 2}));
  CHECK(id.exit_code == 0);
  CHECK(id.payload["unipotent_factors"].empty());
  CHECK(id.payload["recomposition_ok"] == true);

  // general chain element: x, y + x^2, z + x^3 + x y
  Json map = identity_map_json({1, 2, 3});
  map["components"][1][0].push_back(Json{{"exps", {{"x_1_1", 2}}}, {"coeff", 1}});
  map["components"][2][0].push_back(Json{{"exps", {{"x_1_1", 3}}}, {"coeff", 1}});
  map["components"][2][0].push_back(
      Json{{"exps", {{"x_1_1", 1}, {"x_2_1", 1}}}, {"coeff", 1}});
  const auto r = run_decompose({1, 2, 3}, "q", map);
  CHECK(r.exit_code == 0);
  CHECK(r.payload["recomposition_ok"] == true);
  REQUIRE(r.payload["unipotent_factors"].size() == 2);
  CHECK(r.payload["unipotent_factors"][0]["level"] == 2);
  CHECK(r.payload["unipotent_factors"][1]["level"] == 3);
  CHECK(r.payload["linear"][0][0][0] == 1);

  // singular block
  Json bad = identity_map_json({1, 2});
  bad["components"][0][0] = Json::array();
  const auto sing = run_decompose({1, 2}, "q", bad);
  CHECK(sing.exit_code == 1);
  CHECK(sing.payload["error"] == "not an automorphism");

  // over F7
  const auto f7 = run_decompose({1, 2}, "fp:7", identity_map_json({1, 2}));
  CHECK(f7.exit_code == 0);
  CHECK_THROWS_AS(run_decompose({1, 2}, "fp:6", identity_map_json({1, 2})), Error);
}

TEST_CASE("verify command") {
  const Json fly = c4_butterfly_json();
  const auto ok = run_verify_butterfly(fly);
  CHECK(ok.exit_code == 0);
  CHECK(ok.payload["report"]["valid"] == true);

  Json mutated = fly;
  mutated["iota"] = {0, 0};
  const auto bad = run_verify_butterfly(mutated);
  CHECK(bad.exit_code == 1);
  bool has_b2 = false;
  for (const auto& v : bad.payload["report"]["violations"])
    if (v["axiom"] == "B2") has_b2 = true;
  CHECK(has_b2);

  GroupPtr s3 = group_ptr(symmetric_group(3));
  const auto xm = run_verify_xmod(crossed_module_to_json(conjugation_module(s3)));
  CHECK(xm.exit_code == 0);
  CHECK(xm.payload["pi0"]["order"] == 1);
  CHECK(xm.payload["pi1"]["order"] == 1);
}

TEST_CASE("split command") {
  const auto none = run_split_butterfly(c4_butterfly_json());
  CHECK(none.exit_code == 0);
  CHECK(none.payload["section"].is_null());

  Json product = c4_butterfly_json();
  product["E"] = group_to_json(direct_product(cyclic_group(2), cyclic_group(2)));
  const auto found = run_split_butterfly(product);
  CHECK(found.exit_code == 0);
  CHECK(found.payload["section"].is_array());

  CentralExtension c4;
  c4.total = group_ptr(cyclic_group(4));
  c4.embed = {0, 2};
  c4.proj = {0, 1, 0, 1};
  const auto ext = run_split_extension(extension_to_json(c4));
  CHECK(ext.exit_code == 0);
  CHECK(ext.payload["section"].is_null());

  const auto prod_ext = run_split_extension(
      extension_to_json(product_extension(group_ptr(cyclic_group(2)),
                                          group_ptr(cyclic_group(2)))));
  CHECK(prod_ext.payload["section"].is_array());
}

TEST_CASE("quotient command") {
  const auto q = run_quotient(c4_butterfly_json());
  CHECK(q.exit_code == 0);
  CHECK(q.payload["invariants"]["ker_kappa"]["order"] == 1);
  CHECK(q.payload["invariants"]["coker_kappa"]["name"] == "C4");
  CHECK(q.payload["invariants"]["im_rho"]["order"] == 1);
  CHECK(q.payload["invariants"]["middle"]["name"] == "C4");
  CHECK(q.payload["invariants"]["one_stack"] == true);
  CHECK(q.payload["invariants"]["orbifold_type"] == false);

  Json mutated = c4_butterfly_json();
  mutated["sigma"] = {0, 0, 0, 0};
  CHECK(run_quotient(mutated).exit_code == 1);
}

TEST_CASE("examples command matches its fixtures") {
  const auto r = run_examples();
  CHECK(r.exit_code == 0);
  CHECK(r.payload["golden_match"] == true);
}

TEST_CASE("command output is byte-deterministic") {
  const auto a = run_counts({1, 2, 3}).payload.dump(2);
  const auto b = run_counts({1, 2, 3}).payload.dump(2);
  CHECK(a == b);

  // through the real binary as well
  const std::string r1 = run_binary("counts --weights 6,10,15");
  const std::string r2 = run_binary("counts --weights 6,10,15");
  CHECK(r1 == r2);
  CHECK(r1.rfind("0|", 0) == 0);
}

TEST_CASE("binary exit codes follow the contract") {
  CHECK(run_binary("counts --weights 2,3").rfind("0|", 0) == 0);
  CHECK(run_binary("counts --weights 1").rfind("2|", 0) == 0);
  CHECK(run_binary("counts").rfind("2|", 0) == 0);
  CHECK(run_binary("sections --weights 2,3 --degree 1").rfind("0|", 0) == 0);
  CHECK(run_binary("examples").rfind("0|", 0) == 0);

  std::ofstream("/tmp/wpgl_bad.json") << "{not json";
  CHECK(run_binary("verify --butterfly /tmp/wpgl_bad.json").rfind("2|", 0) == 0);

  std::ofstream("/tmp/wpgl_fly.json") << c4_butterfly_json().dump();
  CHECK(run_binary("verify --butterfly /tmp/wpgl_fly.json").rfind("0|", 0) == 0);
  CHECK(run_binary("quotient --butterfly /tmp/wpgl_fly.json").rfind("0|", 0) == 0);

  Json mutated = c4_butterfly_json();
  mutated["iota"] = {0, 0};
  std::ofstream("/tmp/wpgl_bad_fly.json") << mutated.dump();
  CHECK(run_binary("verify --butterfly /tmp/wpgl_bad_fly.json").rfind("1|", 0) == 0);

  // the text renderer is exercised through the binary
  const std::string text = run_binary("--text counts --weights 2,3");
  CHECK(text.rfind("0|command: \"counts\"", 0) == 0);
}

TEST_CASE("group order cap from the environment") {
  std::ofstream("/tmp/wpgl_fly2.json") << c4_butterfly_json().dump();
  setenv("WPGL_MAX_GROUP_ORDER", "2", 1);
  const std::string capped = run_binary("verify --butterfly /tmp/wpgl_fly2.json");
  unsetenv("WPGL_MAX_GROUP_ORDER");
  CHECK(capped.rfind("2|", 0) == 0);
  CHECK(capped.find("cap") != std::string::npos);
}
