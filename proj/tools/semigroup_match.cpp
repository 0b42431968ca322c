#include <iostream>  // for cout, cerr
#include <map>       // for map
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace semimatch::cli;

  CLI::App app{"Permutation and involution matchings of finite semigroups",
               "semigroup-match"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::size_t   cap = 0;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--budget", g.budget_ms,
                 "Wall-clock budget for involution search, in ms (0 = none)");
  auto* cap_opt = app.add_option("--cap", cap, "Override size caps (element count)");
  app.add_flag("--timings", g.timings, "Include timings in analyze reports");

  std::string path;

  auto* analyze = app.add_subcommand("analyze", "Classify a semigroup and decide matchings");
  analyze->add_option("file", path, "Table file")->required();

  MatchingOptions mopts;
  std::uint64_t   count = 0;
  auto* matching = app.add_subcommand("matching", "Find a matching or a certificate of absence");
  matching->add_option("file", path, "Table file")->required();
  matching->add_flag("--involution", mopts.involution, "Require an involution matching");
  auto* count_opt
      = matching->add_option("--count", count, "Count permutation matchings up to LIMIT")
            ->check(CLI::PositiveNumber);
  std::map<std::string, Method> methods{{"auto", Method::automatic},
                                        {"hall", Method::hall},
                                        {"orthodox", Method::orthodox},
                                        {"brute", Method::brute}};
  matching->add_option("--method", mopts.method, "auto, hall, orthodox, or brute")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));

  auto* factors = app.add_subcommand("factors", "Render principal factors and subbands");
  factors->add_option("file", path, "Table file")->required();

  std::vector<std::string>   gen_args;
  std::optional<std::string> out_path;
  auto* gen = app.add_subcommand(
      "gen", "Generate a table: rect M N | rees MATRIXFILE | tn N | product F1 F2");
  gen->add_option("args", gen_args, "Kind and parameters")->required();
  gen->add_option("-o,--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (*cap_opt) {
    g.cap = cap;
  }
  if (*count_opt) {
    mopts.count = count;
  }

  if (*analyze) {
    return cmd_analyze(path, g, std::cout, std::cerr);
  }
  if (*matching) {
    return cmd_matching(path, mopts, g, std::cout, std::cerr);
  }
  if (*factors) {
    return cmd_factors(path, g, std::cout, std::cerr);
  }
  return cmd_gen(gen_args, out_path, g, std::cout, std::cerr);
}
