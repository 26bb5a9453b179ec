#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gauss/cli.hpp"
#include "gauss/radical.hpp"
#include "support/oracle.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "gauss");
  std::ostringstream out, err;
  const int code = gauss::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GAUSS_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(std::vector<std::string> args, const std::string& name, int code = 0) {
  CAPTURE(name);
  const auto r = run(std::move(args));
  CHECK(r.code == code);
  CHECK(r.out == golden(name));
}

}  // namespace

TEST_CASE("golden outputs") {
  check_golden({"radical", "5"}, "radical_5.txt");
  check_golden({"radical", "5", "--format", "latex"}, "radical_5_latex.txt");
  check_golden({"radical", "5", "--format", "sexpr"}, "radical_5_sexpr.txt");
  check_golden({"radical", "5", "--format", "json"}, "radical_5.json");
  check_golden({"radical", "17", "--format", "sexpr"}, "radical_17_sexpr.txt");
  check_golden({"constructible", "289"}, "constructible_289.txt", 1);
  check_golden({"constructible", "289", "--format", "json"}, "constructible_289.json", 1);
  check_golden({"constructible", "60"}, "constructible_60.txt");
  check_golden({"periods", "17", "--level", "1"}, "periods_17_1.txt");
  check_golden({"eisenstein", "13"}, "eisenstein_13.txt");
}

TEST_CASE("small answers") {
  CHECK(run({"radical", "5"}).out == "(-1 + sqrt(5))/4\n");
  CHECK(run({"radical", "3"}).out == "-1/2\n");
  CHECK(run({"primitive-root", "13"}).out == "2\n");
  CHECK(run({"primitive-root", "65537"}).out == "3\n");
  CHECK(run({"phi", "12"}).out == "4\n");
  CHECK(run({"cos", "12"}).out == "sqrt(3)/2\n");
  CHECK(run({"cos", "4"}).out == "0\n");
  CHECK(run({"constructible", "17"}).code == 0);
  CHECK(run({"constructible", "7"}).code == 1);
}

TEST_CASE("the printed radical parses back to cos(2pi/17)") {
  const auto r = run({"radical", "17", "--format", "sexpr"});
  REQUIRE(r.code == 0);
  const auto e = gauss::radical::parse_sexpr(r.out.substr(0, r.out.size() - 1));
  const auto v = gauss::radical::eval_interval(e, gauss::num::Precision{128});
  CHECK(oracle::meets(v, oracle::cos_bracket(1, 17)));
}

TEST_CASE("json shapes") {
  const auto rad = nlohmann::json::parse(run({"radical", "17", "--format", "json"}).out);
  CHECK(rad["p"] == 17);
  CHECK(rad["sqrt_depth"] == 3);
  CHECK(rad["text"].is_string());

  const auto yes = nlohmann::json::parse(run({"constructible", "60", "--format", "json"}).out);
  CHECK(yes["constructible"] == true);
  CHECK(yes["two_power_part"] == 4);
  CHECK(yes["fermat_primes"] == nlohmann::json::array({3, 5}));
  CHECK(yes["obstruction"].is_null());

  const auto no = nlohmann::json::parse(run({"constructible", "63", "--format", "json"}).out);
  CHECK(no["obstruction"]["prime"] == 3);
  CHECK(no["obstruction"]["kind"] == "repeated_prime");
  const auto seven = nlohmann::json::parse(run({"constructible", "14", "--format", "json"}).out);
  CHECK(seven["obstruction"]["kind"] == "non_fermat_prime");
}

TEST_CASE("json output round-trips byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"radical", "17", "--format", "json"},
           {"cos", "60", "--format", "json"},
           {"constructible", "289", "--format", "json"},
           {"periods", "17", "--level", "0", "--format", "json"},
       }) {
    const auto out = run(args).out;
    CHECK(nlohmann::ordered_json::parse(out).dump(2) + "\n" == out);
    CHECK(run(args).out == out);
  }
}

TEST_CASE("verification modes") {
  const auto num = run({"radical", "17", "--verify", "numeric"});
  CHECK(num.code == 0);
  CHECK(num.out.find("numeric check: pass") != std::string::npos);
  const auto exact = run({"radical", "17", "--verify", "exact"});
  CHECK(exact.code == 0);
  CHECK(exact.out.find("tower depth: 3") != std::string::npos);
  CHECK(exact.out.find("quadratic checks passed: 14") != std::string::npos);
  CHECK(exact.out.find("conjugation checks passed: 7") != std::string::npos);
  CHECK(run({"cos", "120", "--verify", "numeric"}).out.find("numeric check: pass") !=
        std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"radical"},
           {"radical", "13"},
           {"radical", "65537"},
           {"radical", "5", "--format", "yaml"},
           {"radical", "5", "--precision", "8"},
           {"cos", "7"},
           {"periods", "17"},
           {"periods", "17", "--level", "3"},
           {"periods", "17", "--level", "-1"},
           {"primitive-root", "12"},
           {"eisenstein", "15"},
           {"constructible", "0"},
       }) {
    CAPTURE(args.size() > 0 ? args[0] : std::string("(none)"));
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error:", 0) == 0);
    CHECK(r.out.empty());
  }
  CHECK(run({"radical", "65537"}).err.find("--allow-65537") != std::string::npos);
}
