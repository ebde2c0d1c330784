#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "boxcount/algebra/render.hpp"
#include "boxcount/cli/cli.hpp"
#include "boxcount/dtcount/dtcount.hpp"

using namespace boxcount;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = "boxcount_cli_" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("vertex command") {
  const auto cy = run({"vertex", "--legs", ";;", "--zorder", "3", "--spec", "cy"});
  CHECK(cy.code == 0);
  CHECK(cy.out == "1 + z + 3z^2 + 6z^3\n");
  const auto leg = run({"vertex", "--legs", "1;;", "--zorder", "0", "--format", "json"});
  REQUIRE(leg.code == 0);
  const auto j = nlohmann::json::parse(leg.out);
  CHECK(j.at("coefficients").size() == 1);
  CHECK(j.at("coefficients").at("0") == "1");
  CHECK(run({"vertex", "--legs", "bad", "--zorder", "2"}).code == 2);
  CHECK(run({"vertex", "--legs", ";;"}).code == 2);
  CHECK(run({"vertex", "--zorder", "1"}).code == 2);
  // --delta counts from the minimal size of the legs.
  CHECK(run({"vertex", "--legs", "1;1;", "--delta", "1", "--spec", "cy"}).out ==
        run({"vertex", "--legs", "1;1;", "--zorder", "0", "--spec", "cy"}).out);
  const auto csv = run({"vertex", "--legs", ";;", "--zorder", "2", "--spec", "cy", "--format", "csv"});
  CHECK(csv.out == "z_power,coefficient\n0,\"1\"\n1,\"1\"\n2,\"3\"\n");
}

TEST_CASE("specializations from the command line") {
  CHECK(run({"vertex", "--legs", ";;", "--zorder", "1", "--spec", "cy", "--spec", "t1=4"}).out == "1 + z\n");
  const auto pole = run({"vertex", "--legs", ";;", "--zorder", "1", "--spec", "t1=1"});
  CHECK(pole.code == 3);
  CHECK(pole.err.find("witness") != std::string::npos);
  CHECK(run({"vertex", "--legs", ";;", "--zorder", "1", "--spec", "t9=2"}).code == 2);
}

TEST_CASE("z command") {
  const auto coni = run({"z", "--builtin", "conifold", "--qorder", "1", "--zorder", "4", "--spec", "cy", "--dtpt"});
  CHECK(coni.code == 0);
  CHECK(coni.out == "1: 1\nQ: -z - 2z^2 - 3z^3 - 4z^4\n");
  // Zero caps: the product of the degree-0 vertex series in each chart.
  const auto cube = run({"z", "--builtin", "P1cubed", "--zorder", "1", "--format", "json"});
  REQUIRE(cube.code == 0);
  const ToricGraph g = ToricGraph::builtin("P1cubed");
  BoxSeries expected = BoxSeries::one(1);
  for (int v = 0; v < 8; ++v) expected = expected * degree0_series(1, g.vertex_frame(v));
  const auto j = nlohmann::json::parse(cube.out);
  CHECK(j.at("series").size() == 1);
  CHECK(j.at("series").at("1").at("1") == render(expected.coefficient(1).reduced(), default_names(3)));
  CHECK(ToricGraph::from_json(j.at("geometry")).to_json() == g.to_json());

  const std::string good = R"({"vertices":[{"weights":[[1,0,0],[0,1,0],[0,0,1]]},{"weights":[[-1,0,0],[1,0,1],[1,1,0]]}],
      "edges":[{"v":[0,1],"m":-1,"mp":-1}]})";
  const auto path = temp_file("good.json", good);
  CHECK(run({"z", "--geometry", path, "--qorder", "1", "--zorder", "2", "--spec", "cy", "--dtpt"}).out == "1: 1\nQ: -z - 2z^2\n");
  const auto missing = temp_file("missing.json", R"({"vertices":[{"weights":[[1,0,0],[0,1,0],[0,0,1]]},{"weights":[[-1,0,0],[1,0,1],[1,1,0]]}],
      "edges":[{"v":[0,1],"mp":-1}]})");
  CHECK(run({"z", "--geometry", missing, "--zorder", "1"}).code == 2);
  CHECK(run({"z", "--geometry", "no_such_file.json", "--zorder", "1"}).code == 2);
  CHECK(run({"z", "--builtin", "conifold", "--zorder", "1", "--qorder", "R=1"}).code == 2);
  std::remove(path.c_str());
  std::remove(missing.c_str());
}

TEST_CASE("output does not depend on the worker count") {
  const std::vector<std::string> base{"z", "--builtin", "Xn", "--n", "3", "--qorder", "1", "--zorder", "2", "--format", "json"};
  auto with_jobs = [&](const std::string& jobs) {
    auto args = base;
    args.push_back("--jobs");
    args.push_back(jobs);
    return run(args).out;
  };
  const auto one = with_jobs("1");
  CHECK(one == with_jobs("4"));
  nlohmann::json parsed;
  CHECK_NOTHROW(parsed = nlohmann::json::parse(one));
  CHECK(parsed.contains("series"));
}

TEST_CASE("verify command") {
  CHECK(run({"verify", "mcmahon", "--order", "6"}).code == 0);
  CHECK(run({"verify", "mcmahon", "--order", "6", "--canary"}).code == 1);
  const auto nek = run({"verify", "nekrasov-degree0", "--order", "3", "--mode", "exact"});
  CHECK(nek.code == 0);
  CHECK(nlohmann::json::parse(nek.out).at("status") == "pass");
  const auto sampled = run({"verify", "nekrasov-degree0", "--order", "3", "--mode", "random", "--seed", "11"});
  CHECK(sampled.code == 0);
  CHECK(nlohmann::json::parse(sampled.out).at("seed") == 11);
  CHECK(run({"verify", "nekrasov-degree0", "--order", "2", "--canary"}).code == 1);
  CHECK(run({"verify", "ext1", "--order", "3"}).code == 0);
  CHECK(run({"verify", "ext1", "--order", "3", "--canary"}).code == 1);
  CHECK(run({"verify", "hilbC3", "--order", "2"}).code == 0);
  CHECK(run({"verify", "cy-vertex", "--order", "3"}).code == 0);
  CHECK(run({"verify", "hilbC3", "--order", "2", "--canary"}).code == 2);
  CHECK(run({"verify", "nosuch", "--order", "1"}).code == 2);
  CHECK(run({"verify", "mcmahon"}).code == 2);
  const std::string report = "boxcount_cli_report.json";
  const auto written = run({"verify", "mcmahon", "--order", "4", "--out", report, "--format", "text"});
  CHECK(written.out == "mcmahon order 4: pass\n");
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  for (const char* key : {"check", "order", "status", "witness", "seed"}) CHECK(j.contains(key));
  std::remove(report.c_str());
}

TEST_CASE("nekrasov command") {
  const auto u1 = temp_file("u1.json", R"({"ranks":[1]})");
  const auto r = run({"nekrasov", "--gauge", u1, "--order", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + ((t1^(1/2)*t2^(1/2))/((1 - t2)*(1 - t1)))*z\n");
  const auto rank0 = temp_file("rank0.json", R"({"ranks":[0]})");
  CHECK(run({"nekrasov", "--gauge", rank0, "--order", "1"}).code == 2);
  const auto adjoint = temp_file("adj.json", R"({"ranks":[1],"matter":[{"i":0,"j":0,"mass":"1"}],"order":2})");
  const auto counted = run({"nekrasov", "--gauge", adjoint, "--format", "json"});
  REQUIRE(counted.code == 0);
  const auto terms = nlohmann::json::parse(counted.out).at("terms");
  REQUIRE(terms.size() == 3);
  CHECK(terms[1].at("text") == "1");
  CHECK(terms[2].at("text") == "2");
  for (const auto& p : {u1, rank0, adjoint}) std::remove(p.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"vertex", "--legs", ";;", "--zorder", "1", "--format", "xml"}).code == 2);
}
