#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int status;
  std::string out;
};

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "affw_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

Result run(const std::string& args, const std::string& input) {
  auto file = scratch() / "in.json";
  std::ofstream(file) << input;
  std::string cmd = std::string(AFFW_CLI) + " " + args + " --in " + file.string();
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

const char* kExampleOrders = R"({
  "from": [{"dir":[1,0],"level":0},{"dir":[0,1],"level":0},{"dir":[1,1],"level":1},{"dir":[1,0],"level":1},
           {"dir":[-1,0],"level":1},{"dir":[0,-1],"level":1},{"dir":[-1,-1],"level":1}],
  "to":   [{"dir":[0,1],"level":0},{"dir":[-1,0],"level":1},{"dir":[1,1],"level":1},{"dir":[1,0],"level":1},
           {"dir":[-1,-1],"level":1},{"dir":[0,-1],"level":1},{"dir":[1,0],"level":0}]
})";

}  // namespace

TEST_CASE("closure of a root and its opposite shift") {
  Result r = run("closure --type A2 --window 10", R"([{"dir":[1,0],"level":0},{"dir":[-1,0],"level":1}])");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["window_agrees"] == true);
  auto sets = j["closure"];
  REQUIRE(sets.size() == 2);
  CHECK(sets["1,0"]["kind"] == "ray");
  CHECK(sets["1,0"]["lo"] == 0);
  CHECK(sets["-1,0"]["kind"] == "ray");
  CHECK(sets["-1,0"]["lo"] == 1);
}

TEST_CASE("maximal words") {
  for (auto [t, n] : {std::pair{"A2", 6}, {"B2", 8}, {"G2", 12}}) {
    Result r = run(std::string("word maximal --type ") + t, "{}");
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["maximal"].size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("braid connect on the seven-root example") {
  Result r = run("braid connect --type A2", kExampleOrders);
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK_FALSE(j["moves"].empty());
}

TEST_CASE("dot output") {
  Result r = run("braid graph --type A2 --format dot", R"([{"dir":[1,0],"level":0},{"dir":[0,1],"level":0},{"dir":[1,1],"level":0}])");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("graph braid {", 0) == 0);
  CHECK(r.out.find("v0 -- v1") != std::string::npos);
  CHECK(r.out.find("label=\"a,a+b,b\"") != std::string::npos);
}

TEST_CASE("errors") {
  Result bad = run("closure --type A2", "[{\"dir\":[1,0],\"level\":");
  CHECK(bad.status == 1);
  auto j = nlohmann::json::parse(bad.out);
  CHECK(j["error"]["kind"] == "parse_error");
  CHECK(j["error"]["position"].get<int>() > 0);

  Result neg = run("closure --type A2", R"([{"dir":[-1,0],"level":0}])");
  CHECK(neg.status == 1);

  Result suite = run("verify --suite nope", "{}");
  CHECK(suite.status == 1);
}

TEST_CASE("verify reports") {
  Result r = run("verify --type B2 --suite d_equals_h", "{}");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("\"cases\":16") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* args : {"word maximal --type G2", "verify --type A2 --suite lattice_laws --seed 3"}) {
    Result a = run(args, "{}"), b = run(args, "{}");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  Result a = run("braid connect --type A2", kExampleOrders), b = run("braid connect --type A2", kExampleOrders);
  CHECK(a.out == b.out);
}
