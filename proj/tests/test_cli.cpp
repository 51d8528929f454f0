#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

// the verifier binary sits next to the test binaries in the build directory
std::string binary() {
  if (const char* env = std::getenv("SL213_VERIFY_BIN")) return env;
  return "./sl213-verify";
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("cli: --list prints the suite names") {
  RunResult r = run("--list");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "group\nsymbolic\nmodular-equations\nphi-identifications\n"
        "singularities\nhauptmodul\nklein-ade\n");
}

TEST_CASE("cli: group suite passes with exit 0") {
  RunResult r = run("--suite group");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("summary:") != std::string::npos);
  CHECK(r.out.find(" fail") != std::string::npos);
  CHECK(r.out.find("0 fail, 0 inconclusive") != std::string::npos);
}

TEST_CASE("cli: JSON report schema and round trip") {
  RunResult r = run("--suite group --json");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);

  REQUIRE(doc.contains("version"));
  REQUIRE(doc.contains("config"));
  REQUIRE(doc.contains("results"));
  REQUIRE(doc.contains("summary"));
  CHECK(doc["config"]["truncation_margin"] == 30);
  CHECK(doc["config"]["suites"] == nlohmann::json::array({"group"}));

  int pass = 0, fail = 0, inc = 0;
  for (const auto& res : doc["results"]) {
    REQUIRE(res.contains("name"));
    REQUIRE(res.contains("status"));
    REQUIRE(res.contains("truncation"));
    REQUIRE(res.contains("ms"));
    std::string st = res["status"];
    if (st == "pass") ++pass;
    else if (st == "fail") ++fail;
    else ++inc;
    // exact matrix checks report a symbolic truncation marker
    CHECK(res["truncation"] == "symbolic");
  }
  CHECK(doc["summary"]["pass"] == pass);
  CHECK(doc["summary"]["fail"] == fail);
  CHECK(doc["summary"]["inconclusive"] == inc);
  CHECK(fail == 0);
  CHECK(inc == 0);

  // serialization round trip is lossless
  CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("cli: modular-equations JSON at a custom truncation") {
  RunResult r = run("--suite modular-equations --truncation 20 --json");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["truncation_margin"] == 20);
  CHECK(doc["results"].size() == 23);  // 21 vanishing checks + 2 dependencies
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["summary"]["inconclusive"] == 0);
  for (const auto& res : doc["results"])
    if (res["truncation"] != "symbolic") CHECK(res["truncation"].get<long>() >= 20);
}

TEST_CASE("cli: error handling exit codes") {
  CHECK(run("--bogus-flag").exit_code == 2);
  CHECK(run("--suite nonsense").exit_code == 2);
  CHECK(run("--truncation 2").exit_code == 2);
  // self-test controls report fail by design, so the exit status is 1
  CHECK(run("--suite group --self-test").exit_code == 1);
}
