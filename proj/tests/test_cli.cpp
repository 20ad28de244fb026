#include <doctest.h>

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "stacky/cli.hpp"

using namespace stacky;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "stacky");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<Json> lines(const std::string& s) {
  std::vector<Json> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) v.push_back(Json::parse(line));
  return v;
}

}  // namespace

TEST_CASE("triangle") {
  const Run t = run({"triangle", "2", "3", "5", "--format", "table"});
  CHECK(t.code == 0);
  CHECK(t.out.find("spherical icosahedral 60") != std::string::npos);
  const Json j = Json::parse(run({"triangle", "2", "3", "7"}).out);
  CHECK(j["schema"] == "v1");
  CHECK(j["verb"] == "triangle");
}

TEST_CASE("classify-orbifold") {
  const Run r = run({"classify-orbifold", R"({"genus":0,"orders":[3,3,3],"punctures":0,"compact":true})", "--format",
                     "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Euclidean") != std::string::npos);
}

TEST_CASE("gerbes") {
  const Json j = Json::parse(run({"gerbes", "--H", "Z4", "--m", "1", "--n", "1"}).out);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["pi1"] == "Z4");
  CHECK(j["rows"][1]["pi1"] == "Z2");
  CHECK(j["rows"][2]["pi1"] == "1");
}

TEST_CASE("other verbs") {
  CHECK(Json::parse(run({"footballs", "4", "6"}).out)["pi1"] == "Z2");
  CHECK(Json::parse(run({"spherical", "--Gamma", "Z2", "--m", "2", "--n", "4"}).out)["count"] == 4);
  CHECK(Json::parse(run({"dd-classes", "--Gamma", "D4", "--d", "2"}).out)["D_order"] == 2);
  CHECK(Json::parse(run({"h2", "--Gamma", "Z4", "--A", "2,4"}).out)["order"] == 8);
  CHECK(Json::parse(run({"coset-enum", "<x,y | x^2, y^3, (x*y)^5>"}).out)["index"] == 60);
  CHECK(run({"witness", "heisenberg", "--n", "3"}).code == 0);
  CHECK(run({"witness", "psl2", "--m", "2", "--n", "3", "--p", "5", "--q-max", "11"}).code == 0);
  CHECK(run({"pi1", R"({"genus":0,"orders":[2,3],"punctures":1})", "--panel", "minimal"}).code == 0);
}

TEST_CASE("exit codes") {
  const Run bad = run({"triangle", "1", "2", "3"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"h2", "--Gamma", "Z30000", "--A", "2"}).code == 3);
  CHECK(run({"no-such-verb"}).code == 2);
  CHECK(run({"classify-orbifold", "{not json"}).code == 2);
  CHECK(run({"h2", "--Gamma", "Z4", "--A", "2,x"}).code == 2);
  CHECK(run({"gerbes", "--H", "S3", "--m", "2", "--n", "4"}).code == 2);
}

TEST_CASE("triangle scan") {
  const Run r = run({"scan", "triangle", "p=1..6", "q=1..6", "r=1..6", "--sorted"});
  CHECK(r.code == 0);
  const auto v = lines(r.out);
  CHECK(v.size() == 56);
  int errors = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(v[i]["index"] == i);
    errors += v[i].contains("error");
  }
  // exactly the triples containing 1 are rejected
  CHECK(errors == 21);
}

TEST_CASE("football and h2 scans give gcd tables") {
  for (const auto& j : lines(run({"scan", "footballs", "m=1..4", "n=1..4"}).out)) {
    const int m = j["params"]["m"], n = j["params"]["n"];
    CHECK(j["result"]["gcd"] == std::gcd(m, n));
  }
  const auto h = lines(run({"scan", "h2", "n=1..5", "m=1..5"}).out);
  REQUIRE(h.size() == 25);
  for (const auto& j : h) {
    const int m = j["params"]["m"], n = j["params"]["n"];
    CHECK(j["result"]["order"] == std::gcd(m, n));
  }
}

TEST_CASE("output is byte stable") {
  const std::vector<std::string> a{"scan", "gerbes", "m=1..2", "n=1..3", "--base", R"({"H":"Z6"})"};
  CHECK(run(a).out == run(a).out);
  CHECK(run({"spherical", "--Gamma", "S3", "--m", "2", "--n", "4"}).out ==
        run({"spherical", "--Gamma", "S3", "--m", "2", "--n", "4"}).out);
}
