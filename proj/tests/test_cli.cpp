// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cnl/cli.hpp"

using namespace cnl;
using json_t = nlohmann::ordered_json;

namespace {

struct cli_result {
  int code;
  std::string out;
  std::string err;
};

cli_result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("lvalue reports vanishing for 5 in stable JSON") {
  cli_result r = run_cli({"lvalue", "5", "--json"});
  REQUIRE(r.code == cli::exit_ok);
  json_t j = json_t::parse(r.out);
  CHECK(j["vanishing"] == "zero");
  CHECK(j["n"] == 5);
  CHECK(j["b"] == 18);
  CHECK(j["tau"]["num_b"] == 18);
  CHECK(j["tau"]["num_offset"] == 0);
  CHECK(j["tau"]["den"] == 50);
  CHECK(j["sha_rounded"].is_null());
  CHECK(j["tunnell"]["vanishing"] == true);
  CHECK(j["zero_order"] == 1);
  // schema-stable key order
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "case", "b", "tau", "theta_abs",
                                         "lvalue", "err", "vanishing",
                                         "sha_predicted", "sha_rounded",
                                         "tunnell", "zero_order"});
}

TEST_CASE("reruns are byte-identical") {
  cli_result a = run_cli({"lvalue", "17", "--json"});
  cli_result b = run_cli({"lvalue", "17", "--json"});
  CHECK(a.code == cli::exit_ok);
  CHECK(a.out == b.out);
}

TEST_CASE("precision flag widens the serialization") {
  cli_result a = run_cli({"lvalue", "1", "--json", "--precision", "192"});
  REQUIRE(a.code == cli::exit_ok);
  json_t j = json_t::parse(a.out);
  std::string lv = j["lvalue"].get<std::string>();
  // ceil(192 * 0.3) = 58 significant digits
  CHECK(lv.size() >= 58);
  CHECK(lv.substr(0, 10) == "0.65551438");
}

TEST_CASE("domain errors exit with code 1") {
  cli_result r = run_cli({"lvalue", "6"});
  CHECK(r.code == cli::exit_domain);
  CHECK(r.err.find("3") != std::string::npos);

  cli_result sha5 = run_cli({"sha", "5"});
  CHECK(sha5.code == cli::exit_domain);

  cli_result zo10 = run_cli({"zero-order", "10"});
  CHECK(zo10.code == cli::exit_domain);
}

TEST_CASE("usage errors exit with code 64") {
  CHECK(run_cli({"bogus-command"}).code == cli::exit_usage);
  CHECK(run_cli({"lvalue"}).code == cli::exit_usage);
  CHECK(run_cli({"lvalue", "5", "--precision", "16"}).code ==
        cli::exit_usage);
  CHECK(run_cli({}).code == cli::exit_usage);
}

TEST_CASE("verify gauss prints six passing lines") {
  cli_result r = run_cli({"verify", "--suite", "gauss"});
  CHECK(r.code == cli::exit_ok);
  CHECK(count_lines(r.out) == 6);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("zero-order reports the double zero at 41") {
  cli_result r = run_cli({"zero-order", "41", "--json"});
  REQUIRE(r.code == cli::exit_ok);
  json_t j = json_t::parse(r.out);
  CHECK(j["zero_order"] == 2);
  CHECK(j["samples"] == 32);
  CHECK(j["coeff_mags"].size() == 5);
}

TEST_CASE("scan emits CSV with fixed columns and resumes cleanly") {
  std::string path = "cli_scan_test.csv";
  std::remove(path.c_str());

  cli_result full = run_cli({"scan", "1", "30", "--out", path});
  REQUIRE(full.code == cli::exit_ok);
  std::string complete = read_file(path);
  CHECK(complete.rfind(
            "n,case,b,theta_abs,lvalue,err,vanishing,sha_rounded,tunnell_a,"
            "tunnell_b,zero_order,status",
            0) == 0);
  // valid n in [1,30]: 1 2 5 10 13 17 26 29
  CHECK(count_lines(complete) == 9);

  // truncate the last two rows and rerun: identical bytes
  std::string truncated = complete;
  for (int cut = 0; cut < 2; ++cut) {
    std::size_t pos = truncated.find_last_of('\n', truncated.size() - 2);
    truncated.erase(pos + 1);
  }
  std::ofstream(path) << truncated;
  cli_result resumed = run_cli({"scan", "1", "30", "--out", path});
  REQUIRE(resumed.code == cli::exit_ok);
  CHECK(read_file(path) == complete);

  // rerun over the complete file appends nothing
  cli_result again = run_cli({"scan", "1", "30", "--out", path});
  REQUIRE(again.code == cli::exit_ok);
  CHECK(read_file(path) == complete);
  std::remove(path.c_str());
}

TEST_CASE("scan to stdout as JSON lines") {
  cli_result r = run_cli({"scan", "1", "10", "--json"});
  REQUIRE(r.code == cli::exit_ok);
  std::istringstream in(r.out);
  std::string line;
  std::vector<long> ns;
  while (std::getline(in, line)) {
    json_t j = json_t::parse(line);
    ns.push_back(j["n"].get<long>());
  }
  CHECK(ns == std::vector<long>{1, 2, 5, 10});
}

TEST_CASE("empty scan ranges produce headers only") {
  cli_result r = run_cli({"scan", "3", "3"});
  CHECK(r.code == cli::exit_ok);
  CHECK(count_lines(r.out) == 1);
}
