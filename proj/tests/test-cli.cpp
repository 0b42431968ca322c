#include <filesystem>  // for temp_directory_path
#include <sstream>     // for ostringstream
#include <string>      // for string

#include <catch2/catch_amalgamated.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "semimatch/report.hpp"

using namespace semimatch;
using namespace semimatch::cli;

namespace {

  std::string data(std::string const& name) {
    return std::string(SEMIMATCH_TEST_DATA) + "/" + name;
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  template <typename F>
  Run run(F&& f) {
    std::ostringstream out, err;
    int                code = f(out, err);
    return {code, out.str(), err.str()};
  }

  Run matching(std::string const& file, MatchingOptions m = {}, GlobalOptions g = {}) {
    return run([&](auto& o, auto& e) { return cmd_matching(data(file), m, g, o, e); });
  }

}  // namespace

TEST_CASE("analyze report", "[cli]") {
  auto s = test::seven_element_band();
  auto r = analyze(s);
  REQUIRE(r.size == 7);
  REQUIRE(r.classification.orthodox);
  REQUIRE(r.green_summary.d_classes == 2);
  REQUIRE_FALSE(r.matching_verdict.exists);
  REQUIRE(r.matching_verdict.certificate);
  REQUIRE(r.matching_verdict.involution_status == "exhausted_complete");
  REQUIRE(r.timings.empty());

  auto j = to_json(s, r);
  REQUIRE(j["size"] == 7);
  REQUIRE(j["matching_verdict"]["exists"] == false);
  REQUIRE(j["matching_verdict"]["matching"].is_null());
  REQUIRE_FALSE(j.contains("timings"));
  // D-classes and subbands are numbered from 1, as in the text output
  REQUIRE(j["d_class_reports"][0]["d_class"] == 1);
  REQUIRE(j["d_class_reports"][0]["dissimilar_pair"] == Json::array({1, 2}));

  AnalysisOptions timed;
  timed.timings = true;
  REQUIRE(to_json(s, analyze(s, timed)).contains("timings"));
}

TEST_CASE("analyze output is deterministic", "[cli]") {
  GlobalOptions g;
  g.json = true;
  for (auto const* file : {"seven_elt.tbl", "t3.tbl", "inverse.tbl", "band.tbl"}) {
    INFO(file);
    auto a = run([&](auto& o, auto& e) { return cmd_analyze(data(file), g, o, e); });
    auto b = run([&](auto& o, auto& e) { return cmd_analyze(data(file), g, o, e); });
    REQUIRE(a.code == kFound);
    REQUIRE(a.out == b.out);
    REQUIRE_NOTHROW(Json::parse(a.out));
  }
  g.json = false;
  auto text = run([&](auto& o, auto& e) { return cmd_analyze(data("seven_elt.tbl"), g, o, e); });
  REQUIRE(text.out.find("orthodox") != std::string::npos);
}

TEST_CASE("matching subcommand", "[cli]") {
  SECTION("absent with a certificate") {
    auto r = matching("seven_elt.tbl");
    REQUIRE(r.code == kAbsent);
    REQUIRE(r.out.find("(1,1)") != std::string::npos);
    REQUIRE(r.out.find("not similar") != std::string::npos);
  }
  SECTION("found, every method") {
    for (auto m : {Method::automatic, Method::hall, Method::orthodox, Method::brute}) {
      MatchingOptions o;
      o.method = m;
      auto r   = matching("inverse.tbl", o);
      REQUIRE(r.code == kFound);
      REQUIRE(r.out.find(" -> ") != std::string::npos);
    }
  }
  SECTION("the orthodox method refuses T_3") {
    MatchingOptions o;
    o.method = Method::orthodox;
    REQUIRE(matching("t3.tbl", o).code == kInputError);
  }
  SECTION("involution on T_3") {
    MatchingOptions o;
    o.involution = true;
    auto r       = matching("t3.tbl", o);
    REQUIRE(r.code == kFound);
    REQUIRE(r.out.find("# kind: involution") != std::string::npos);
  }
  SECTION("counting") {
    MatchingOptions o;
    o.count = 10;
    REQUIRE(matching("five_elt.tbl", o).out == "count = 1\n");
    REQUIRE(matching("band.tbl", o).out == "count >= 10\n");
  }
  SECTION("json") {
    GlobalOptions g;
    g.json = true;
    auto j = Json::parse(matching("seven_elt.tbl", {}, g).out);
    REQUIRE(j["status"] == "absent");
    j = Json::parse(matching("c3.tbl", {}, g).out);
    REQUIRE(j["status"] == "found");
  }
  SECTION("input errors") {
    auto r = matching("nonassoc.tbl");
    REQUIRE(r.code == kInputError);
    REQUIRE(r.err.find("(0 * 0) * 0 != 0 * (0 * 0)") != std::string::npos);
    REQUIRE(matching("no-such-file.tbl").code == kInputError);
  }
}

TEST_CASE("factors subcommand", "[cli]") {
  GlobalOptions g;
  auto r = run([&](auto& o, auto& e) { return cmd_factors(data("seven_elt.tbl"), g, o, e); });
  REQUIRE(r.code == kFound);
  REQUIRE(r.out.find("subbands: U1 1x2 U2 1x1") != std::string::npos);
  REQUIRE(r.out.find("not similar (U1, U2)") != std::string::npos);

  r = run([&](auto& o, auto& e) { return cmd_factors(data("t3.tbl"), g, o, e); });
  REQUIRE(r.out.find("NotOrthodox") != std::string::npos);

  g.json = true;
  r = run([&](auto& o, auto& e) { return cmd_factors(data("seven_elt.tbl"), g, o, e); });
  REQUIRE_NOTHROW(Json::parse(r.out));
}

TEST_CASE("gen subcommand", "[cli]") {
  GlobalOptions g;
  auto rect = run([&](auto& o, auto& e) { return cmd_gen({"rect", "2", "3"}, {}, g, o, e); });
  REQUIRE(rect.code == kFound);
  REQUIRE(parse_table(rect.out) == rectangular_band(2, 3));

  auto rees = run([&](auto& o, auto& e) {
    return cmd_gen({"rees", data("seven_elt.mat")}, {}, g, o, e);
  });
  REQUIRE(parse_table(rees.out) == test::seven_element_band());

  auto tn = run([&](auto& o, auto& e) { return cmd_gen({"tn", "3"}, {}, g, o, e); });
  REQUIRE(parse_table(tn.out) == full_transformation(3));
  REQUIRE(parse_table(tn.out) == load_table(data("t3.tbl")));

  auto prod = run([&](auto& o, auto& e) {
    return cmd_gen({"product", data("c3.tbl"), data("band.tbl")}, {}, g, o, e);
  });
  REQUIRE(parse_table(prod.out).size() == 18);

  auto path = (std::filesystem::temp_directory_path() / "semimatch-gen-test.tbl").string();
  REQUIRE(run([&](auto& o, auto& e) { return cmd_gen({"rect", "1", "2"}, path, g, o, e); }).code
          == kFound);
  REQUIRE(load_table(path) == rectangular_band(1, 2));
  std::filesystem::remove(path);

  REQUIRE(run([&](auto& o, auto& e) { return cmd_gen({"tn", "5"}, {}, g, o, e); }).code
          == kInputError);
  REQUIRE(run([&](auto& o, auto& e) { return cmd_gen({"rect", "x", "2"}, {}, g, o, e); }).code
          == kInputError);
  REQUIRE(run([&](auto& o, auto& e) { return cmd_gen({"cube"}, {}, g, o, e); }).code
          == kInputError);
  REQUIRE(run([&](auto& o, auto& e) { return cmd_gen({}, {}, g, o, e); }).code
          == kInputError);
}

namespace {

  std::vector<std::string> keys(Json const& j) {
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out.push_back(it.key());
    }
    return out;
  }

  void check_matching_json(Json const& m) {
    REQUIRE(m.is_object());
    REQUIRE((m["kind"] == "permutation" || m["kind"] == "involution"));
    REQUIRE(m["provenance"].is_string());
    REQUIRE(m["map"].is_array());
    for (auto const& p : m["map"]) {
      REQUIRE(p.is_array());
      REQUIRE(p.size() == 2);
    }
  }

  void check_d_class_json(Json const& d) {
    REQUIRE(keys(d)
            == std::vector<std::string>{"d_class", "size", "regular", "band", "subbands",
                                        "similar", "dissimilar_pair", "not_orthodox"});
    REQUIRE(d["d_class"].get<int>() >= 1);
    REQUIRE((d["band"].is_null() || d["band"].size() == 2));
    REQUIRE(d["subbands"].is_array());
    REQUIRE((d["similar"].is_null() || d["similar"].is_boolean()));
    REQUIRE((d["not_orthodox"].is_null() || d["not_orthodox"].size() == 3));
  }

}  // namespace

TEST_CASE("analyze JSON follows the documented layout", "[cli][property]") {
  for (auto const& f : test::full_corpus()) {
    INFO(f.name);
    auto j = to_json(f.table, analyze(f.table));
    REQUIRE(keys(j)
            == std::vector<std::string>{"size", "classification", "green_summary",
                                        "d_class_reports", "matching_verdict"});
    REQUIRE(keys(j["classification"]).size() == 11);
    for (auto const& [k, v] : j["classification"].items()) {
      REQUIRE(v.is_boolean());
    }
    REQUIRE(keys(j["green_summary"])
            == std::vector<std::string>{"r_classes", "l_classes", "h_classes", "d_classes"});
    REQUIRE(j["d_class_reports"].size() == j["green_summary"]["d_classes"]);
    for (auto const& d : j["d_class_reports"]) {
      check_d_class_json(d);
    }
    auto const& mv = j["matching_verdict"];
    REQUIRE(keys(mv)
            == std::vector<std::string>{"exists", "matching", "certificate",
                                        "involution_status", "involution"});
    if (mv["exists"]) {
      check_matching_json(mv["matching"]);
      REQUIRE(mv["certificate"].is_null());
    } else {
      REQUIRE(mv["matching"].is_null());
      REQUIRE(mv["certificate"]["subset"].size() > mv["certificate"]["image"].size());
    }
    auto status = mv["involution_status"].get<std::string>();
    REQUIRE((status == "found" || status == "exhausted_complete"
             || status == "exhausted_budget" || status == "skipped"));
    if (status == "found") {
      check_matching_json(mv["involution"]);
      REQUIRE(mv["involution"]["kind"] == "involution");
    } else {
      REQUIRE(mv["involution"].is_null());
    }
  }
}

TEST_CASE("matching and factors JSON follow the documented layout", "[cli]") {
  GlobalOptions g;
  g.json = true;
  for (auto const* file : {"seven_elt.tbl", "t3.tbl", "c3.tbl", "five_elt.tbl", "band.tbl"}) {
    INFO(file);
    auto m = Json::parse(matching(file, {}, g).out);
    REQUIRE(keys(m) == std::vector<std::string>{"status", "matching", "certificate", "note"});
    if (!m["matching"].is_null()) {
      check_matching_json(m["matching"]);
    }
    auto f = Json::parse(
        run([&](auto& o, auto& e) { return cmd_factors(data(file), g, o, e); }).out);
    REQUIRE(keys(f) == std::vector<std::string>{"orthodox", "d_classes"});
    for (auto d : f["d_classes"]) {
      REQUIRE(d["egg_box"].is_string());
      d.erase("egg_box");
      check_d_class_json(d);
    }
  }
  MatchingOptions o;
  o.count = 3;
  auto c  = Json::parse(matching("band.tbl", o, g).out);
  REQUIRE(keys(c) == std::vector<std::string>{"count", "at_limit"});
}
