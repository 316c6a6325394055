#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

#include "akspecht/json_io.hpp"

using namespace ak;

namespace {
struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(AKSPECHT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  Run r = run(args + " --json");
  CHECK(r.code == expect_code);
  return json::parse(r.out);
}

const std::string f5_file = std::string(AKSPECHT_FIXTURE_DIR) + "/f5.json";
}  // namespace

TEST_CASE("enum") {
  auto j = run_json("enum --m 2 --r 2");
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  CHECK(multipartition_from_json(j[2]) == Multipartition({{1}, {1}}));
  Run text = run("enum --m 2 --r 2");
  CHECK(text.code == 0);
  CHECK(text.out.find("1|1") != std::string::npos);
}

TEST_CASE("verify standard-basis") {
  auto j = run_json("verify standard-basis --lambda \"1|1\" --params generic");
  CHECK(j["computed_dim"] == 2);
  CHECK(j["pass"] == true);
  CHECK(run("verify standard-basis --lambda \"2|1\" --params " + f5_file).code == 0);
  CHECK(run("verify rank-one --lambda \"2,1|0\"").code == 0);
}

TEST_CASE("branch modular") {
  auto j = run_json("branch modular --lambda \"2|1\" --params " + f5_file);
  CHECK(j["pass"] == true);
  std::size_t socle = 0;
  for (const auto& row : j["rows"]) socle += row["h_D"].get<std::size_t>();
  CHECK(socle == 2);
  auto below = run_json("branch modular --lambda \"2|1\" --params f5 --convention below", 1);
  CHECK(below["pass"] == false);
}

TEST_CASE("other subcommands") {
  CHECK(run("dominance --lambda \"0|2\" --mu \"2|0\"").code == 0);
  CHECK(run_json("tableaux --lambda \"2,1\" --flavor dual-row")["count"] == 2);
  CHECK(run_json("w-elements --lambda \"3,1|2,2|1\"")["w_lambda"] == json({6, 8, 9, 7, 2, 4, 3, 5, 1}));
  CHECK(run_json("algebra-selftest --m 2 --r 3 --params f5")["basis_size"] == 48);
  CHECK(run_json("specht-dim --lambda \"2|1\" --twisted")["dim"] == 3);
  CHECK(run_json("branch ordinary --lambda \"2|1\"")["pass"] == true);
  CHECK(run_json("branch semisimple --lambda \"2|1\"")["pass"] == true);
  auto nodes = run_json("nodes classify --lambda \"2|1\" --params f5");
  CHECK(nodes["nodes"].size() == 2);
  CHECK(run_json("sum-of-squares --m 2 --r 2")["sum_of_squares"] == 8);
}

TEST_CASE("exit codes") {
  CHECK(run("enum --m 2 --r 2 --help").code == 0);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("verify standard-basis --lambda \"1,2|1\"").code == 2);
  CHECK(run("verify standard-basis --lambda \"1||1\"").code == 2);
  CHECK(run("branch semisimple --lambda \"2|1\" --params f5").code == 2);
  CHECK(run("branch modular --lambda \"1,1,1|0\" --params f5").code == 2);
  CHECK(run("verify standard-basis --lambda 1 --params /nonexistent.json").code == 2);
  CHECK(run("algebra-selftest --m 2 --r 6").code == 2);
  CHECK(run("nodes classify --lambda \"2|1\" --convention sideways").code == 2);
  CHECK(run("verify standard-basis --lambda \"1|1|1\" --params f5").code == 2);
}

TEST_CASE("output is deterministic") {
  for (std::string args : {"enum --m 3 --r 2 --json", "verify standard-basis --lambda \"2|1\" --json",
                           "branch modular --lambda \"1|2\" --params f5", "algebra-selftest --m 2 --r 2"}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json round trips") {
  for (const auto& L : enumerate_multipartitions(3, 3)) CHECK(multipartition_from_json(to_json(L)) == L);
  CHECK(multipartition_from_json(json::parse("[[3,1],[2,2],[1]]")) == Multipartition({{3, 1}, {2, 2}, {1}}));
  CHECK(to_json(Multipartition({{}, {2}})).dump() == R"({"components":[[],[2]]})");
  CHECK(to_json(QuantumChar{}) == "inf");
  Algebra<RationalField> A(generic_parameters(2, 2));
  auto z = z_element(A, Multipartition({{1}, {1}}));
  CHECK(element_from_json(A, element_to_json(A, z)) == z);
  auto spec = f5_fixture_spec();
  auto back = parameter_spec_from_json(json::parse(to_json(spec).dump()));
  CHECK(back.q == spec.q);
  CHECK(back.u == spec.u);
}
