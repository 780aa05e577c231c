#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "leibniz/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = leibniz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("algebras") {
  const auto list = run({"algebras"});
  CHECK(list.code == 0);
  CHECK(contains(list.out, "A11: [g,e] = f, [g,f] = alpha*e + f (alpha != 0)"));
  const auto show = run({"algebras", "show", "--algebra", "A5", "--format", "json"});
  CHECK(show.code == 0);
  CHECK(nlohmann::json::parse(show.out)["id"] == "A5");
  CHECK(run({"algebras", "show"}).code == 2);
  CHECK(run({"algebras", "show", "--algebra", "A99"}).code == 2);
}

TEST_CASE("check-leibniz") {
  const auto r = run({"check-leibniz", "--all"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "13/13 algebras satisfy the Leibniz identity"));
}

TEST_CASE("verify-families") {
  const auto all = run({"verify-families"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "53/53 families verified"));
  const auto one = run({"verify-families", "--family", "2.7/4"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "1/1 families verified"));
  CHECK(run({"verify-families", "--family", "2.1/9"}).code == 2);
}

TEST_CASE("gen-constraints") {
  const auto reduced = run({"gen-constraints", "--algebra", "A12"});
  CHECK(reduced.code == 0);
  CHECK(contains(reduced.out, "p3 - k1"));
  const auto raw = run({"gen-constraints", "--algebra", "A12", "--raw", "--format", "json"});
  CHECK(raw.code == 0);
  const auto j = nlohmann::json::parse(raw.out);
  CHECK(j["algebra"] == "A12");
  CHECK(j["polys"].size() > 5);
  CHECK(run({"gen-constraints", "--algebra", "A7", "--alpha", "0"}).code == 2);
  CHECK(run({"gen-constraints", "--algebra", "A7", "--alpha", "2"}).code == 0);
}

TEST_CASE("paper-system and compare-systems") {
  CHECK(run({"paper-system", "--algebra", "A1"}).code == 0);
  CHECK(run({"paper-system", "--algebra", "A1", "--uncorrected"}).code == 0);
  CHECK(run({"paper-system", "--algebra", "A2", "--uncorrected"}).code == 2);

  const auto agree = run({"compare-systems", "--algebra", "A5", "--grid", "-1..1"});
  CHECK(agree.code == 0);
  CHECK(contains(agree.out, "1/1 systems agree"));
  const auto differ = run({"compare-systems", "--algebra", "A1", "--uncorrected"});
  CHECK(differ.code == 1);
  CHECK(contains(differ.out, "counterexample"));
}

TEST_CASE("instantiate") {
  const auto ok = run({"instantiate", "--family", "2.7/2", "--values", "k1=0,l1=1,p1=1,p3=2", "--alpha", "3/16"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "0, 0, 0\n1, 0, 0\n1, -3/2, 2\n");

  const auto violated = run({"instantiate", "--family", "2.1/2", "--values", "k1=1,l1=0,l2=3"});
  CHECK(violated.code == 1);
  CHECK(contains(violated.err, "side condition violated: l1 != 0"));

  CHECK(run({"instantiate", "--family", "2.1/2", "--values", "k1=1,l1=2"}).code == 2);
  CHECK(run({"instantiate", "--family", "2.1/2", "--values", "k1=1;l1=2"}).code == 2);
  CHECK(run({"instantiate", "--family", "2.7/2", "--values", "k1=0,l1=1,p1=1,p3=2", "--alpha", "1"}).code == 1);
  CHECK(run({"instantiate", "--values", "k1=1"}).code == 2);
}

TEST_CASE("classify") {
  const auto r = run({"classify", "--algebra", "A1", "--matrix", "1,0,0;2,3,1;0,0,1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["nijenhuis"] == true);
  REQUIRE(j["matches"].size() == 1);
  CHECK(j["matches"][0]["family"] == "2.1/2");
  CHECK(j["matches"][0]["binding"] == nlohmann::json{{"k1", "1"}, {"l1", "2"}, {"l2", "3"}});

  const auto text = run({"classify", "--algebra", "A1", "--matrix", "1,0,0;0,1,0;0,0,5", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "2.1/1"));

  CHECK(run({"classify", "--algebra", "A1", "--matrix", "1,0,0;0,1,0"}).code == 2);
  CHECK(run({"classify", "--algebra", "A7", "--matrix", "0,0,0;0,0,0;0,0,0"}).code == 2);
}

TEST_CASE("grid, report and fuzz") {
  const auto grid = run({"grid", "--algebra", "A5", "--grid", "0,1", "--format", "json"});
  CHECK(grid.code == 0);
  const auto report = run({"report", "--algebra", "A5", "--grid", "0,1", "--format", "markdown"});
  CHECK(report.code == 0);
  CHECK(contains(report.out, "- A5 over 0,1: 8 of 512 Nijenhuis, 0 unclassified [2.5/1:8]"));
  const auto fuzz = run({"fuzz", "--seed", "1", "--samples", "5"});
  CHECK(fuzz.code == 0);
  CHECK(contains(fuzz.out, "seed 1: 265 samples, 0 failures"));
}

TEST_CASE("output does not depend on the number of workers") {
  for (const std::vector<std::string>& base :
       {std::vector<std::string>{"grid", "--algebra", "A11", "--alpha", "2", "--format", "json"},
        std::vector<std::string>{"report", "--all", "--grid", "0,1", "--format", "json"},
        std::vector<std::string>{"fuzz", "--seed", "7", "--samples", "3", "--format", "json"},
        std::vector<std::string>{"compare-systems", "--algebra", "A7", "--grid", "-1..1"}}) {
    auto one = base, many = base;
    one.insert(one.end(), {"--jobs", "1"});
    many.insert(many.end(), {"--jobs", "3"});
    const auto a = run(one), b = run(many);
    CHECK_MESSAGE(a.code == 0, base.front());
    CHECK_MESSAGE(a.out == b.out, base.front());
  }
}

TEST_CASE("--output writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "leibniz_cli_output_test.json";
  std::filesystem::remove(path);
  const auto r = run({"verify-families", "--format", "json", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CHECK(nlohmann::json::parse(content.str()).is_array());
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"grid", "--algebra", "A5", "--jobs", "0"}).code == 2);
  CHECK(run({"grid", "--algebra", "A5", "--grid", "2..1"}).code == 2);
  CHECK(run({"grid", "--algebra", "A5", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
