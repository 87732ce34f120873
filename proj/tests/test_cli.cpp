#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pthresh/cli.hpp"
#include "pthresh/rational.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pthresh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = pthresh::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(PTHRESH_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& text) {
  static int serial = 0;
  std::string path = (std::filesystem::temp_directory_path() /
                      ("pthresh_cli_" + std::to_string(::getpid()) + "_" + std::to_string(serial++) + ".profile"))
                         .string();
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("table tho-wpsc") {
  auto r = run({"--format", "json", "table", "tho-wpsc"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["rows"][4][2] == "48/71");
  CHECK(j["rows"][4][0] == "720/2621");
  auto again = run({"--format", "json", "table", "tho-wpsc"});
  CHECK(again.out == r.out);

  auto human = run({"table", "tho-wpsc"});
  CHECK(human.code == 0);
  CHECK(human.out.find("48/71") != std::string::npos);

  auto csv = run({"--format", "csv", "table", "stl"});
  CHECK(csv.out.find("3,2,3/5") != std::string::npos);
}

TEST_CASE("sequence table and values") {
  auto r = run({"seq", "--which", "alpha", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("24/7") != std::string::npos);

  auto j = json::parse(run({"--format", "json", "seq", "--which", "b", "--n", "6"}).out);
  CHECK(j["value"] == "95/288");

  auto seqs = run({"table", "sequences"});
  CHECK(seqs.code == 0);
  CHECK(seqs.out.find("4277/1440") != std::string::npos);

  auto lp = run({"--dump-lp", "seq", "--which", "alpha", "--n", "2"});
  CHECK(lp.code == 0);
  CHECK(lp.out.find(">= 1") != std::string::npos);

  auto dec = run({"--decimals", "3", "seq", "--which", "alpha", "--n", "3"});
  CHECK(dec.out.find("2.667") != std::string::npos);
}

TEST_CASE("count") {
  auto r = run({"--format", "json", "count", "--method", "thiele-o", fixture("etho2.profile")});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["committees"].size() == 1);
  CHECK(j["committees"][0] == json::array({"A", "X", "Y"}));

  auto ph = json::parse(run({"--format", "json", "count", "--method", "phragmen", fixture("ega3.profile")}).out);
  CHECK(ph.contains("final_max_loads"));
  for (const auto& v : ph["final_max_loads"]) CHECK_NOTHROW(pthresh::Rational::parse(v.get<std::string>()));
}

TEST_CASE("apportion") {
  auto r = run({"apportion", "--method", "dhondt", "--seats", "3", "--votes", "37,13", "--names", "KLM,ABC"});
  CHECK(r.code == 0);
  CHECK(r.out.find("KLM=2") != std::string::npos);
  CHECK(r.out.find("ABC=1") != std::string::npos);
  CHECK(run({"apportion", "--method", "adams", "--seats", "1", "--votes", "1,1"}).code == 2);
}

TEST_CASE("threshold") {
  auto j = json::parse(
      run({"threshold", "--method", "bv", "--scenario", "ejr", "--ell", "2", "--seats", "3", "--json"}).out);
  CHECK(j["value"] == "3/5");
  CHECK(j["status"] == "exact");
  auto hat = json::parse(run({"--format", "json", "threshold", "--method", "sntv", "--scenario", "tactic", "--ell",
                              "2", "--seats", "3", "--hat"})
                             .out);
  CHECK(hat["value"] == "1/2");
  CHECK(run({"threshold", "--method", "av", "--scenario", "psc", "--ell", "1", "--seats", "2"}).code == 2);
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", "--method", "thiele-o", "--scenario", "same", "--ell", "2", fixture("etho2.profile")}).code == 1);
  CHECK(run({"check", "--method", "thiele-o", "--scenario", "same", "--ell", "1", fixture("etho2.profile")}).code == 0);
  auto path = temp_file("!seats 2\n!W 1 : {A B}\n!W 1 : {A C}\n1 : {D}\n");
  CHECK(run({"check", "--method", "av", "--scenario", "same", "--ell", "1", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"count", "--method", "nope", fixture("etho2.profile")}).code == 2);
  CHECK(run({"--format", "xml", "table", "stl"}).code == 2);
  auto path = temp_file("!seats 2\n1 : {A B}\n1 {C}\n");
  auto r = run({"count", "--method", "av", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("witness, search and audit") {
  auto list = run({"witness", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("ejr-block") != std::string::npos);
  auto w = run({"witness", "--theorem", "ejr-block", "--method", "bv", "--scenario", "ejr", "--ell", "2", "--seats",
                "3"});
  CHECK(w.code == 0);
  CHECK(w.out.find("3/5") != std::string::npos);

  auto s = json::parse(run({"--format", "json", "search", "--method", "dhondt", "--scenario", "party", "--ell", "1",
                            "--seats", "2", "--grid", "3", "--candidates", "4", "--groups", "3", "--length", "1"})
                           .out);
  CHECK(s["best"] == "1/3");

  auto a = run({"audit", "--smax", "4"});
  CHECK(a.code == 0);
}
