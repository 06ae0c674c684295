#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "wpgl/cli.hpp"

namespace {

using wpgl::Error;
using wpgl::Json;
using wpgl::cli::CommandResult;
using wpgl::cli::Limits;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
}

int emit(const CommandResult& result, bool text) {
  if (text)
    std::cout << wpgl::cli::render_text(result.payload);
  else
    std::cout << result.payload.dump(2) << "\n";
  return result.exit_code;
}

Limits limits_from_env() {
  Limits lim;
  if (const char* cap = std::getenv("WPGL_MAX_GROUP_ORDER")) {
    try {
      lim.max_group_order = std::stoi(cap);
    } catch (const std::exception&) {
      throw Error("bad WPGL_MAX_GROUP_ORDER value");
    }
    if (lim.max_group_order < 1) throw Error("bad WPGL_MAX_GROUP_ORDER value");
  }
  return lim;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with weighted projective general linear 2-groups"};
  app.require_subcommand(1);
  bool text = false;
  bool json_flag = false;
  app.add_flag("--text", text, "human-readable output");
  app.add_flag("--json", json_flag, "machine-readable output (default)");

  std::string weights, field = "q", map_file, xmod_file, butterfly_file, extension_file;
  long long degree = 0;
  bool upto = false;

  auto* counts = app.add_subcommand("counts", "level counts and component group data");
  counts->add_option("--weights", weights, "comma-separated weights")->required();

  auto* decompose =
      app.add_subcommand("decompose", "split an automorphism into unipotent and linear parts");
  decompose->add_option("--weights", weights, "comma-separated weights")->required();
  decompose->add_option("--field", field, "q or fp:p (default q)");
  decompose->add_option("--map", map_file, "automorphism JSON file")->required();

  auto* sections = app.add_subcommand("sections", "graded section counts");
  sections->add_option("--weights", weights, "comma-separated weights")->required();
  sections->add_option("--degree", degree, "degree")->required();
  sections->add_flag("--upto", upto, "list all counts up to the degree");

  auto* verify = app.add_subcommand("verify", "check crossed-module or butterfly axioms");
  verify->add_option("--xmod", xmod_file, "crossed module JSON file");
  verify->add_option("--butterfly", butterfly_file, "butterfly JSON file");

  auto* split = app.add_subcommand("split", "find a homomorphic section or report absence");
  split->add_option("--butterfly", butterfly_file, "butterfly JSON file");
  split->add_option("--extension", extension_file, "central extension JSON file");

  auto* quotient = app.add_subcommand("quotient", "quotient invariants of a butterfly");
  quotient->add_option("--butterfly", butterfly_file, "butterfly JSON file")->required();

  app.add_subcommand("examples", "recompute the worked examples and diff against fixtures");

  auto* regen = app.add_subcommand("dump-examples", "print freshly computed example data");
  regen->group("");  // hidden; used to regenerate the frozen fixture

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Limits lim = limits_from_env();
    if (counts->parsed())
      return emit(wpgl::cli::run_counts(wpgl::cli::parse_weights(weights)), text);
    if (decompose->parsed())
      return emit(wpgl::cli::run_decompose(wpgl::cli::parse_weights(weights), field,
                                           read_json_file(map_file)),
                  text);
    if (sections->parsed())
      return emit(wpgl::cli::run_sections(wpgl::cli::parse_weights(weights), degree, upto),
                  text);
    if (verify->parsed()) {
      if (!xmod_file.empty())
        return emit(wpgl::cli::run_verify_xmod(read_json_file(xmod_file), lim), text);
      if (!butterfly_file.empty())
        return emit(wpgl::cli::run_verify_butterfly(read_json_file(butterfly_file), lim),
                    text);
      throw Error("verify needs --xmod or --butterfly");
    }
    if (split->parsed()) {
      if (!butterfly_file.empty())
        return emit(wpgl::cli::run_split_butterfly(read_json_file(butterfly_file), lim),
                    text);
      if (!extension_file.empty())
        return emit(wpgl::cli::run_split_extension(read_json_file(extension_file), lim),
                    text);
      throw Error("split needs --butterfly or --extension");
    }
    if (quotient->parsed())
      return emit(wpgl::cli::run_quotient(read_json_file(butterfly_file), lim), text);
    if (regen->parsed()) {
      std::cout << wpgl::cli::compute_examples().dump(2) << "\n";
      return 0;
    }
    return emit(wpgl::cli::run_examples(), text);
  } catch (const Error& e) {
    std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  }
}
