#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eqschubert/cli.hpp"
#include "eqschubert/json_io.hpp"
#include "eqschubert/restriction.hpp"
#include "support/oracles.hpp"

using namespace eqschubert;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eqschubert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("eqschubert_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::vector<std::string> kExample{"--d", "6", "--n", "13", "--u", "4,6,7,10,11,13",
                                        "--v", "1,2,3,8,9,10"};

std::vector<std::string> with(std::string command, std::vector<std::string> extra) {
  std::vector<std::string> out{std::move(command)};
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("restrict with both methods on the worked example") {
    auto args = with("restrict", kExample);
    args.insert(args.end(), {"--method", "both"});
    const auto r = cli(args);
    CHECK(r.code == exit_code::ok);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    const auto expected = to_string(restrict_det(GIndex::parse("4,6,7,10,11,13", 6, 13),
                                                 GIndex::parse("1,2,3,8,9,10", 6, 13)));
    CHECK(ls[0] == "det: " + expected);
    CHECK(ls[1] == "paths: " + expected);
    CHECK(ls[2] == "MATCH");
  }

  TEST_CASE("paths on the worked example") {
    const auto r = cli(with("paths", kExample));
    CHECK(r.code == exit_code::ok);
    CHECK(lines(r.out).front() == "tuples: 9");
    const auto shown = cli([] {
      auto a = with("paths", kExample);
      a.push_back("--show-tuples");
      a.push_back("--grid");
      return a;
    }());
    CHECK(shown.out.find("tuple 9:") != std::string::npos);
    CHECK(shown.out.find("m_face: ") != std::string::npos);
  }

  TEST_CASE("vanishing restriction prints 0") {
    const auto r = cli({"restrict", "--d", "1", "--n", "2", "--u", "1", "--v", "2"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "0\n");
  }

  TEST_CASE("invalid arguments exit with 2") {
    CHECK(cli({"restrict", "--d", "3", "--n", "2", "--u", "1"}).code == 2);
    CHECK(cli({"restrict", "--d", "2", "--n", "4", "--u", "4,2", "--v", "1,2"}).code == 2);
    CHECK(cli({"restrict", "--d", "2", "--n", "4", "--v", "1,2"}).code == 2);
    CHECK(cli({"restrict", "--d", "2", "--n", "4", "--u", "2,4", "--method", "chain"}).code == 2);
    CHECK(cli({"restrict", "--d", "2", "--n", "4", "--u", "2,4", "--method", "nope"}).code == 2);
    CHECK(cli({"paths", "--d", "2", "--n", "4", "--u", "1,2", "--v", "3,4"}).code == 2);
    CHECK(cli({"table", "--d", "3", "--n", "8", "--limit", "10"}).code == 2);
    CHECK(cli({"gkm-check", "--file", "/nonexistent/file.json"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    const auto r = cli({"restrict", "--d", "3", "--n", "2", "--u", "1"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("help exits cleanly") { CHECK(cli({"--help"}).code == 0); }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"table", "--d", "2", "--n", "4", "--jobs", "2"};
    const auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == cli({"table", "--d", "2", "--n", "4", "--method", "chain"}).out);
  }

  TEST_CASE("class JSON round-trips through restrict and gkm-check") {
    const auto r = cli({"restrict", "--d", "2", "--n", "5", "--u", "2,4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    const auto a = eqclass_from_json(j);
    CHECK(a == schubert_class(GIndex::parse("2,4", 2, 5)));
    CHECK(to_json(a) == j);
    const auto file = temp_file("class.json", r.out);
    const auto check = cli({"gkm-check", "--file", file});
    CHECK(check.code == 0);
    CHECK(check.out == "pass\n");
  }

  TEST_CASE("gkm-check reports the broken edge") {
    const auto file = temp_file(
        "broken.json",
        R"({"d":1,"n":2,"restrictions":{"1":[{"coeff":"1","exps":[0,0]}],"2":[]}})");
    const auto r = cli({"gkm-check", "--file", file});
    CHECK(r.code == 0);
    CHECK(lines(r.out).front() == "fail: 1 violation");
    CHECK(r.out.find("w=1 x=2") != std::string::npos);
    const auto j = cli({"gkm-check", "--file", file, "--format", "json"});
    const auto parsed = Json::parse(j.out);
    CHECK(parsed["ok"] == false);
    CHECK(parsed["violations"].size() == 1);
    const auto missing = temp_file("missing.json", R"({"d":1,"n":2,"restrictions":{"1":[]}})");
    CHECK(cli({"gkm-check", "--file", missing}).code == 2);
    const auto garbage = temp_file("garbage.json", "{not json");
    CHECK(cli({"gkm-check", "--file", garbage}).code == 2);
  }

  TEST_CASE("polynomial JSON round-trips") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 6;
      auto p = oracle::random_polynomial(n, rng, 6, 4);
      p *= Integer("123456789012345678901234567890");
      const auto j = to_json(p);
      CHECK(polynomial_from_json(j, n) == p);
      CHECK(polynomial_from_json(Json::parse(j.dump()), n) == p);
    }
    const auto diff = Polynomial::difference(2, 2, 1);
    CHECK(to_json(diff * diff).dump() ==
          R"([{"coeff":"1","exps":[0,2]},{"coeff":"-2","exps":[1,1]},{"coeff":"1","exps":[2,0]}])");
    CHECK_THROWS(polynomial_from_json(Json::parse(R"([{"coeff":"1","exps":[1]}])"), 2));
    CHECK_THROWS(polynomial_from_json(Json::parse(R"([{"coeff":"x","exps":[1,0]}])"), 2));
  }

  TEST_CASE("structure constant table JSON round-trips") {
    const auto r = cli({"table", "--d", "2", "--n", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto table = table_from_json(Json::parse(r.out), 2, 4);
    const auto direct = struct_const_table(2, 4, StructConstMethod::solve);
    REQUIRE(table.size() == direct.size());
    for (std::size_t k = 0; k < table.size(); ++k) {
      CHECK(table[k].u == direct[k].u);
      CHECK(table[k].w == direct[k].w);
      CHECK(table[k].c == direct[k].c);
    }
    CHECK(to_json(table) == Json::parse(r.out));
  }

  TEST_CASE("giambelli and structconst verdicts") {
    const auto g = cli({"giambelli", "--d", "2", "--n", "5", "--u", "2,4"});
    CHECK(g.code == 0);
    CHECK(lines(g.out).back() == "verdict: MATCH");
    const auto s = cli({"structconst", "--d", "2", "--n", "4", "--u", "2,4", "--v", "2,4",
                        "--method", "both"});
    CHECK(s.code == 0);
    CHECK(lines(s.out).back() == "MATCH");
    const auto one = cli({"structconst", "--d", "2", "--n", "4", "--u", "2,4", "--v", "2,4",
                          "--w", "2,4", "--method", "chain"});
    CHECK(one.out == "e3 - e2\n");
  }

  TEST_CASE("specialize-zero gives the classical product") {
    const auto r = cli({"structconst", "--d", "2", "--n", "4", "--u", "2,4", "--v", "2,4",
                        "--specialize-zero"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,4: 1\n2,3: 1\n2,4: 0\n");
  }
}
