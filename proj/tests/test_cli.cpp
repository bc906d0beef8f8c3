#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "harmonic2v/cli/commands.hpp"
#include "harmonic2v/cli/expression.hpp"
#include "harmonic2v/errors.hpp"
#include "support.hpp"

using namespace harmonic2v;
using namespace harmonic2v::cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_poly") {
  const Polynomial p = parse_poly("x1^2*u1 - 3/2*u2", 5);
  Monomial a(5);
  a.set(Variable::x(1), 2);
  a.set(Variable::u(1), 1);
  Monomial b(5);
  b.set(Variable::u(2), 1);
  CHECK(p == Polynomial::from_terms(5, {{a, 1}, {b, GaussianRational(rational(-3, 2))}}));
  CHECK(parse_poly("i*x1 + i*i", 5) == parse_poly("-1 + i*x1", 5));
  CHECK(parse_poly("(x1 + u1)^2", 5) == parse_poly("x1^2 + 2*x1*u1 + u1^2", 5));
  CHECK(parse_poly("-(-x2)", 6) == parse_poly("x2", 6));
  CHECK(parse_poly("  6/4 ", 5) == parse_poly("3/2", 5));
  CHECK_THROWS_AS(parse_poly("x9", 5), VariableOutOfRange);
  CHECK_THROWS_AS(parse_poly("u0", 5), VariableOutOfRange);
  CHECK_THROWS_AS(parse_poly("1/0", 5), SyntaxError);
  try {
    parse_poly("x1 + * x2", 5);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("parse and print reach a fixed point") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 5 + trial % 3;
    const Polynomial p = testing::random_poly(rng, m, 5, 6);
    const std::string once = print_poly(p);
    const Polynomial q = parse_poly(once, m);
    CHECK(q == p);
    CHECK(print_poly(q) == once);
  }
}

TEST_CASE("decompose x1*u1") {
  const CommandResult r = cmd_decompose({.m = 5, .poly = "x1*u1"});
  REQUIRE(r.exit_code == kExitOk);
  const json doc = json::parse(r.output);
  CHECK(doc["schema"] == "harmonic2v/1");
  CHECK(doc["reconstruction_check"] == "exact");
  CHECK(doc["m"] == 5);
  REQUIRE(doc["components"].size() == 3);
  for (const auto& c : doc["components"]) {
    CHECK(c.contains("fischer"));
    CHECK(c.contains("ladder"));
    CHECK(c.contains("target"));
    for (const auto& t : c["harmonic"]) CHECK(t["coefficient"].is_string());
  }
  CHECK(doc["components"][2]["harmonic"][0]["coefficient"] == "1/5");
  CHECK(doc["components"][0]["harmonic"].empty());
}

TEST_CASE("decompose trivial input, text output and strategies") {
  const json one = json::parse(cmd_decompose({.m = 5, .poly = "1"}).output);
  REQUIRE(one["components"].size() == 1);
  CHECK(one["components"][0]["target"] == json{{"k", 0}, {"l", 0}});

  const CommandResult text = cmd_decompose({.m = 5, .poly = "x1*u2", .format = Format::text});
  CHECK(text.output.find("reconstruction: exact") != std::string::npos);

  const std::string input = "x1^2*u2 - 3/4*x3*u1*u4 + i*x2*x5*u5 + 2*x1*x2";
  json direct = json::parse(cmd_decompose({.m = 6, .poly = input}).output);
  json sequential =
      json::parse(cmd_decompose({.m = 6, .poly = input, .strategy = Strategy::sequential}).output);
  CHECK(direct["components"] == sequential["components"]);
  CHECK(direct["strategy"] == "direct");
  CHECK(sequential["strategy"] == "sequential");
}

TEST_CASE("output is deterministic") {
  const std::string a = cmd_decompose({.m = 5, .poly = "x1^2*u1*u2 + u3"}).output;
  CHECK(a == cmd_decompose({.m = 5, .poly = "u3 + u2*x1^2*u1"}).output);
  const auto doc = json::parse(a);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("integrate") {
  auto value = [](IntegrateArgs a) {
    const CommandResult r = cmd_integrate(a);
    REQUIRE(r.exit_code == kExitOk);
    return json::parse(r.output)["value"].get<std::string>();
  };
  CHECK(value({.m = 5, .poly = "x1^2"}) == "1/5");
  CHECK(value({.m = 5, .poly = "x1*u1"}) == "0");
  CHECK(value({.m = 4, .poly = "1", .manifold = "sphere"}) == "2 * pi^2");
  CHECK(value({.m = 3, .poly = "x1^2 + 2", .manifold = "sphere"}) == "28/3 * pi");

  const CommandResult mc = cmd_integrate({.m = 5, .poly = "x1^2", .mc_samples = 50000, .seed = 11});
  const json doc = json::parse(mc.output);
  REQUIRE(doc.contains("monte_carlo"));
  const double est = doc["monte_carlo"]["estimate"];
  const double se = doc["monte_carlo"]["stderr"];
  CHECK(std::abs(est - 0.2) <= 4 * se);
  CHECK(doc["monte_carlo"]["seed"] == 11);
  CHECK(mc.output == cmd_integrate({.m = 5, .poly = "x1^2", .mc_samples = 50000, .seed = 11}).output);

  CHECK(cmd_integrate({.m = 4, .poly = "1"}).exit_code == kExitUsage);
  CHECK(cmd_integrate({.m = 5, .poly = "1", .manifold = "torus"}).exit_code == kExitUsage);
  CHECK(cmd_integrate({.m = 5, .poly = "u1", .manifold = "sphere"}).exit_code == kExitFailure);
  CHECK(cmd_integrate({.m = 4, .poly = "1", .manifold = "sphere", .mc_samples = 10}).exit_code ==
        kExitUsage);
}

TEST_CASE("verify command") {
  const CommandResult ladder = cmd_verify({.suite = Suite::ladder, .options = {.max_bidegree = 0}});
  CHECK(ladder.exit_code == kExitOk);
  CHECK(json::parse(ladder.output)["checks"] == 0);
  const CommandResult appendix = cmd_verify({.suite = Suite::appendix, .options = {.m = 5}});
  CHECK(appendix.exit_code == kExitOk);
  const json doc = json::parse(appendix.output);
  CHECK(doc["passed"] == true);
  CHECK(doc["failures"] == 0);
  CHECK(doc["checks"].get<int>() > 100);
  CHECK(cmd_verify({.suite = Suite::relations, .options = {.m = 6, .samples = 5}}).exit_code ==
        kExitOk);
  CHECK(cmd_verify({.suite = Suite::relations, .options = {.m = 3}}).exit_code == kExitUsage);
}

TEST_CASE("run_cli front end") {
  const Run ok = run({"integrate", "x1^2", "--m", "5", "--format", "text"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "1/5\n");
  const Run sphere = run({"integrate", "--poly", "1", "--manifold", "sphere", "--m", "4",
                          "--format", "text"});
  CHECK(sphere.out == "2 * pi^2\n");

  const std::string path = "test_cli_poly.txt";
  {
    std::ofstream f(path);
    f << "x1*u1\n";
  }
  const Run file = run({"decompose", "--poly-file", path, "--m", "5"});
  std::remove(path.c_str());
  CHECK(file.code == 0);
  CHECK(json::parse(file.out)["components"].size() == 3);

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"decompose"}).code == kExitUsage);
  CHECK(run({"decompose", "x1", "--poly", "x2"}).code == kExitUsage);
  CHECK(run({"decompose", "x1 +"}).code == kExitUsage);
  CHECK(run({"decompose", "x1", "--strategy", "fast"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "ladder", "--max-bidegree", "0"}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}
