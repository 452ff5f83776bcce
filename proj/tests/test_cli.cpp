#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rbd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RBD_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("d-table of a single -2 sphere") {
  const auto r = run({"d-table", "--chain", "-2"});
  CHECK(r.code == rbd::cli::kExitOk);
  const auto v = lines(r.out);
  REQUIRE(v.size() == 2);
  CHECK(v[0].find("-1/4") != std::string::npos);
  CHECK(v[1].find("1/4") != std::string::npos);
}

TEST_CASE("lens equivalence") {
  const auto r = run({"lens", "equiv", "25", "4", "25", "21", "--reverse-first"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"lens", "equiv", "25", "7", "25", "14"}).out == "false\n");
  CHECK(run({"lens", "chain", "-5", "-2", "-2", "-2", "-2", "-2"}).out == "-L(25,6)\n");
}

TEST_CASE("fixtures") {
  const auto r = run({"fixtures", "--example", "c53"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"fixtures"}).code == 0);
  CHECK(run({"fixtures", "--example", "nope"}).code == rbd::cli::kExitInput);
}

TEST_CASE("input errors exit with 2") {
  const auto missing = run({"form", "--graph", data("missing.graph")});
  CHECK(missing.code == rbd::cli::kExitInput);
  CHECK_FALSE(missing.err.empty());
  CHECK(run({"form"}).code == rbd::cli::kExitInput);
  CHECK(run({"no-such-command"}).code == rbd::cli::kExitInput);
  CHECK(run({"form", "--chain", "-2", "--park", "5", "3"}).code == rbd::cli::kExitInput);
  CHECK(run({"d-table", "--chain", "-2", "--box", "round"}).code == rbd::cli::kExitInput);
}

TEST_CASE("records are JSON lines and deterministic") {
  const std::vector<std::string> args{"d-table", "--graph", data("c53.graph"), "--format", "records"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto v = lines(a.out);
  REQUIRE(v.size() == 26);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto j = nlohmann::json::parse(v[i]);
    CHECK(j.dump() == v[i]);
    CHECK(j.at("kind") == (i + 1 < v.size() ? "class" : "summary"));
  }
  CHECK(nlohmann::json::parse(v.back()).at("classes") == 25);
  auto jobs = args;
  jobs.insert(jobs.end(), {"--jobs", "4"});
  CHECK(run(jobs).out == a.out);
}

TEST_CASE("extension and blow-down commands") {
  const auto ext = run({"extend", "--graph", data("wahl222.graph")});
  CHECK(ext.code == 0);
  const auto bd = run({"blowdown", "--park", "5", "3", "--reverse", "--ambient", data("e3_2cp2bar.ambient")});
  CHECK(bd.code == 0);
  CHECK(bd.out.find("35") != std::string::npos);
  const auto g = run({"goeritz", "--diagram", data("9_41.diagram"), "--emit-graph"});
  CHECK(g.code == 0);
  CHECK(g.out.find("v ") != std::string::npos);
}
