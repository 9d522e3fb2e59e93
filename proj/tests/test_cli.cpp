#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "oracles.hpp"
#include "parkcomp/cli.hpp"

using namespace parkcomp;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const cli::Backends& b = cli::default_backends()) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, b);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("parkcomp_test_" + name);
}

}  // namespace

TEST_CASE("count goldens") {
  CHECK(call({"count", "--n", "4", "--taken", "1,3", "--increasing"}).out == "7\n");
  CHECK(call({"count", "--n", "8", "--taken", "1,2,6,7", "--increasing", "--method", "det"}).out == "146\n");
  CHECK(call({"count", "--n", "4", "--taken", "2,3"}).out == "7\n");
  CHECK(call({"count", "--n", "4", "--taken", "1,3"}).out == "12\n");
  CHECK(call({"count", "--n", "3"}).out == "16\n");
  const auto all = call({"count", "--n", "4", "--taken", "1,3", "--increasing", "--method", "all"});
  CHECK(all.code == cli::kExitOk);
  CHECK(all.out == "7\n");
}

TEST_CASE("count json") {
  const auto r = call({"count", "--n", "4", "--taken", "2,3", "--method", "all", "--format", "json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["query"]["n"] == 4);
  CHECK(doc["query"]["taken"] == json::array({2, 3}));
  CHECK(doc["query"]["increasing"] == false);
  CHECK(doc["method"] == "all");
  CHECK(doc["value"] == "7");
  CHECK(doc["terms"] == json::array({"2", "2", "3"}));
  CHECK(doc["methods"]["formula"] == "7");
  CHECK(doc["methods"]["brute"] == "7");
  CHECK_FALSE(doc.contains("skipped"));
}

TEST_CASE("large values stay exact") {
  // 31^29 does not fit in 64 bits.
  const auto r = call({"count", "--n", "30"});
  REQUIRE(r.code == 0);
  CHECK(r.out == oracle::pow_big(31, 29).str() + "\n");
}

TEST_CASE("brute methods respect the cap") {
  const auto over = call({"count", "--n", "9", "--method", "brute", "--cap", "1000"});
  CHECK(over.code == cli::kExitInvalidInput);
  const auto all = call({"count", "--n", "9", "--method", "all", "--cap", "1000", "--format", "json"});
  CHECK(all.code == 0);
  const json doc = json::parse(all.out);
  CHECK(doc["skipped"] == json::array({"brute"}));
  CHECK(doc["value"] == "100000000");
}

TEST_CASE("PARKCOMP_CAP is honoured") {
  ::setenv("PARKCOMP_CAP", "10", 1);
  CHECK(cli::cap_from_environment() == 10);
  CHECK(call({"count", "--n", "4", "--method", "brute"}).code == cli::kExitInvalidInput);
  CHECK(call({"count", "--n", "4", "--method", "brute", "--cap", "1000"}).out == "125\n");
  ::setenv("PARKCOMP_CAP", "garbage", 1);
  CHECK(cli::cap_from_environment() == kDefaultCap);
  ::unsetenv("PARKCOMP_CAP");
  CHECK(cli::cap_from_environment() == kDefaultCap);
}

TEST_CASE("invalid input exits 1") {
  CHECK(call({"count", "--n", "4", "--taken", "5"}).code == cli::kExitInvalidInput);
  CHECK(call({"count", "--n", "4", "--taken", "3,1"}).code == cli::kExitInvalidInput);
  CHECK(call({"count", "--n", "4", "--taken", "1,,3"}).code == cli::kExitInvalidInput);
  CHECK(call({"count", "--taken", "1"}).code == cli::kExitInvalidInput);
  CHECK(call({"count", "--n", "4", "--method", "det"}).code == cli::kExitInvalidInput);
  CHECK(call({"count", "--n", "4", "--format", "xml"}).code == cli::kExitInvalidInput);
  CHECK(call({"split", "--seq", "2,1"}).code == cli::kExitInvalidInput);
  CHECK(call({"join", "--blocks", "1,2;2,2"}).code == cli::kExitInvalidInput);
  CHECK(call({"signature", "count", "--s", "2,0"}).code == cli::kExitInvalidInput);
  CHECK(call({"signature", "to-instance", "--s", "2,1"}).code == cli::kExitInvalidInput);
  CHECK(call({"ps", "count", "--u", "3,1"}).code == cli::kExitInvalidInput);
  CHECK(call({"identities", "--check", "nope"}).code == cli::kExitInvalidInput);
  CHECK(call({"frobnicate"}).code == cli::kExitInvalidInput);
  CHECK(call({}).code == cli::kExitInvalidInput);
  const auto r = call({"count", "--n", "4", "--taken", "5"});
  CHECK(r.out.empty());
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("enumerate and verify round trip") {
  const auto plain = call({"enumerate", "--n", "4", "--taken", "2,3"});
  REQUIRE(plain.code == 0);
  CHECK(plain.out == "1,1\n1,2\n1,3\n1,4\n2,1\n3,1\n4,1\n");
  const auto inc = call({"enumerate", "--n", "4", "--taken", "1,3", "--increasing"});
  CHECK(inc.out == "1,1\n1,2\n1,3\n1,4\n2,2\n2,3\n2,4\n");

  const auto txt = temp_file("prefs.txt");
  std::ofstream(txt) << plain.out;
  const auto v = call({"verify", "--n", "4", "--taken", "2,3", "--prefs-file", txt.string()});
  CHECK(v.code == 0);
  CHECK(v.out.find("reject") == std::string::npos);
  CHECK(std::count(v.out.begin(), v.out.end(), '\n') == 7);

  const auto js = call({"enumerate", "--n", "4", "--taken", "2,3", "--format", "json"});
  const auto jpath = temp_file("prefs.json");
  std::ofstream(jpath) << js.out;
  const auto vj = call({"verify", "--n", "4", "--taken", "2,3", "--prefs-file", jpath.string(), "--format", "json"});
  CHECK(vj.code == 0);
  const json doc = json::parse(vj.out);
  CHECK(doc["value"] == "7");
  CHECK(doc["results"].size() == 7);
  std::filesystem::remove(txt);
  std::filesystem::remove(jpath);

  const auto bad = call({"verify", "--n", "4", "--taken", "2,3", "--prefs", "2,2"});
  CHECK(bad.code == 0);
  CHECK(bad.out == "2,2: reject (car 2 cannot park)\n");
  CHECK(call({"verify", "--n", "4", "--taken", "2,3", "--prefs", "1,5"}).code == cli::kExitInvalidInput);
  CHECK(call({"verify", "--n", "4", "--taken", "2,3"}).code == cli::kExitInvalidInput);
  CHECK(call({"verify", "--n", "4", "--prefs-file", "/nonexistent/x"}).code == cli::kExitInvalidInput);
}

TEST_CASE("split and join") {
  CHECK(call({"split", "--seq", "1,2,2,5,8,9"}).out == "1,2,2;1;;1,2\n");
  CHECK(call({"join", "--blocks", "1,2,2;1;;1,2"}).out == "1,2,2,5,8,9\n");
  const json doc = json::parse(call({"split", "--seq", "1,2,2,5,8,9", "--format", "json"}).out);
  CHECK(doc["blocks"] == json::parse("[[1,2,2],[1],[],[1,2]]"));
}

TEST_CASE("signature commands") {
  CHECK(call({"signature", "count", "--s", "2,3"}).out == "7\n");
  CHECK(call({"signature", "count", "--s", "2,3", "--labeled"}).out == "12\n");
  CHECK(call({"signature", "to-instance", "--s", "2,3"}).out == "n=4 taken=1,3\n");
  CHECK(call({"signature", "from-instance", "--n", "8", "--taken", "1,2,6,7"}).out == "3,2,2,4\n");
  CHECK(call({"signature", "from-instance", "--n", "4", "--taken", "4"}).code == cli::kExitInvalidInput);
}

TEST_CASE("ps commands") {
  CHECK(call({"ps", "count", "--u", "1,4"}).out == "7\n");
  CHECK(call({"ps", "count", "--u", "1,4", "--method", "all"}).code == 0);
  CHECK(call({"ps", "volume", "--x", "1,3"}).out == "7/2\n");
  CHECK(call({"ps", "volume", "--u", "1,4"}).out == "7/2\n");
  const json g = json::parse(call({"ps", "goncarov", "--u", "1,4", "--format", "json"}).out);
  CHECK(g["value"] == "7");
  CHECK(g["determinant"] == "7/2");
  CHECK(call({"ps", "enumerate", "--u", "2,2"}).out == "1,1\n1,2\n2,1\n2,2\n");
}

TEST_CASE("render") {
  CHECK(call({"render", "--seq", "2,4", "--width", "4"}).out == "...#\n.###\n##..\n");
  CHECK(call({"render", "--n", "4", "--taken", "1,3"}).out == "...#\n.###\n##..\n");
}

TEST_CASE("identities") {
  const auto r = call({"identities", "--max-n", "5"});
  CHECK(r.code == 0);
  for (const auto& name : cli::identity_checks()) CHECK(r.out.find("PASS " + name) != std::string::npos);
  const json doc = json::parse(call({"identities", "--check", "prop45", "--format", "json"}).out);
  CHECK(doc["value"] == "pass");
}

TEST_CASE("fault injection is detected") {
  auto off_by_one = [](cli::InstanceBackend f) {
    return [f](const TakenSpots& i, std::uint64_t cap) { return f(i, cap) + (i.n() >= 3 ? 1 : 0); };
  };
  const auto base = cli::default_backends();

  for (auto field : {&cli::Backends::ipc_formula, &cli::Backends::ipc_det, &cli::Backends::ipc_dp,
                     &cli::Backends::ipc_brute}) {
    auto b = base;
    b.*field = off_by_one(base.*field);
    const auto r = call({"count", "--n", "4", "--taken", "1,3", "--increasing", "--method", "all"}, b);
    CHECK(r.code == cli::kExitDisagreement);
    CHECK(r.err.find("disagree") != std::string::npos);
  }
  for (auto field : {&cli::Backends::pc_formula, &cli::Backends::pc_brute}) {
    auto b = base;
    b.*field = off_by_one(base.*field);
    CHECK(call({"count", "--n", "4", "--taken", "2,3", "--method", "all"}, b).code == cli::kExitDisagreement);
  }

  auto b = base;
  b.upf_brute = [](std::span<const int>, std::uint64_t) { return Count(0); };
  CHECK(call({"ps", "count", "--u", "1,4", "--method", "all"}, b).code == cli::kExitDisagreement);

  auto ib = base;
  ib.ipc_dp = off_by_one(base.ipc_dp);
  const auto ids = call({"identities", "--max-n", "5"}, ib);
  CHECK(ids.code == cli::kExitDisagreement);
  CHECK(ids.out.find("FAIL methods") != std::string::npos);
}
