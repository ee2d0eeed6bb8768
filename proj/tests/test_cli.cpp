#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "scops/cli.hpp"
#include "scops/document.hpp"
#include "scops/error.hpp"
#include "scops/witnesses.hpp"

using namespace scops;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("scops-cli-" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path file = path / name;
    std::ofstream(file) << text;
    return file.string();
  }
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("sc") {
  CHECK(invoke({"sc", "--op", "revcat", "--m", "2", "--n", "2"}).out == "12\n");
  CHECK(invoke({"sc", "--op", "starcat", "--m", "4", "--n", "4"}).out == "137\n");
  CHECK(invoke({"sc", "--op", "starcat", "--m", "3", "--n", "2", "--k1", "2"}).out == "12\n");
  CHECK(invoke({"sc", "--op", "starcat-special", "--m", "1", "--n", "3"}).out == "4\n");
  const Result bad = invoke({"sc", "--op", "revcat", "--m", "3", "--n", "2", "--k1", "1"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(invoke({"sc", "--op", "revcat", "--m", "0", "--n", "2"}).code == cli::kUsage);
  CHECK(invoke({"sc", "--op", "union", "--m", "2", "--n", "2"}).code == cli::kUsage);
  CHECK(invoke({"sc", "--op", "revcat", "--m", "two", "--n", "2"}).code == cli::kUsage);
}

TEST_CASE("witness") {
  const Result r = invoke({"witness", "--family", "starcat-A", "--m", "2", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const Dfa d = parse_dfa_document(r.out);
  CHECK(d.state_count() == 2);
  CHECK(d.finals() == std::vector<State>{1});
  CHECK(r.out.find("\"finals\": [1]") != std::string::npos);
  CHECK(d == starcat_witness_A(2));

  const Result dot = invoke({"witness", "--family", "revcat-M", "--m", "2", "--format", "dot"});
  CHECK(dot.out == emit_dot(revcat_witness_M(2)));
  CHECK(invoke({"witness", "--family", "revcat-N", "--n", "3"}).out ==
        emit_document(revcat_witness_N(3)));
  CHECK(invoke({"witness", "--family", "sigma-star", "--m", "1", "--sigma", "3"}).out ==
        emit_document(sigma_star_dfa(Alphabet("abc"))));
  CHECK(invoke({"witness", "--family", "revcat-M", "--m", "1"}).code == cli::kUsage);
  CHECK(invoke({"witness", "--family", "nope", "--m", "3"}).code == cli::kUsage);
  CHECK(invoke({"witness", "--family", "revcat-M"}).code == cli::kUsage);
  CHECK(invoke({"witness", "--family", "revcat-M", "--m", "2", "--format", "xml"}).code ==
        cli::kUsage);
}

TEST_CASE("verify") {
  const Result r = invoke({"verify", "--op", "revcat", "--m", "2..3", "--n", "2..3"});
  CHECK(r.code == cli::kOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "op=revcat m=2 n=2 k1=- formula=12 constructed=12 minimal=12 result=pass");
  CHECK(rows[3] == "op=revcat m=3 n=3 k1=- formula=48 constructed=48 minimal=48 result=pass");
  CHECK(invoke({"verify", "--op", "starcat", "--m", "2", "--n", "1..3"}).code == cli::kOk);
  CHECK(invoke({"verify", "--op", "starcat", "--m", "1", "--n", "2"}).code == cli::kUsage);
  CHECK(invoke({"verify", "--op", "revcat", "--m", "3..2", "--n", "2"}).code == cli::kUsage);
  CHECK(invoke({"verify", "--op", "revcat", "--m", "2..x", "--n", "2"}).code == cli::kUsage);
}

TEST_CASE("parse_range") {
  CHECK(cli::parse_range("2..5") == std::pair{2, 5});
  CHECK(cli::parse_range("4") == std::pair{4, 4});
  CHECK(cli::parse_range("3..3") == std::pair{3, 3});
  CHECK_THROWS_AS(cli::parse_range(""), InputError);
  CHECK_THROWS_AS(cli::parse_range("..4"), InputError);
  CHECK_THROWS_AS(cli::parse_range("2...4"), InputError);
  CHECK_THROWS_AS(cli::parse_range("5..2"), InputError);
}

TEST_CASE("compose") {
  TempDir dir;
  const std::string m = dir.write("m.json", emit_document(revcat_witness_M(3)));
  const std::string n = dir.write("n.json", emit_document(revcat_witness_N(2)));

  const Result direct =
      invoke({"compose", "--op", "revcat", "--lhs", m, "--rhs", n, "--method", "direct"});
  const Result oracle =
      invoke({"compose", "--op", "revcat", "--lhs", m, "--rhs", n, "--method", "oracle"});
  REQUIRE(direct.code == cli::kOk);
  REQUIRE(oracle.code == cli::kOk);
  CHECK(lines(direct.out).back() == "states=24 minimal=24");
  const auto oracle_summary = lines(oracle.out).back();
  CHECK(oracle_summary.substr(oracle_summary.find("minimal=")) == "minimal=24");

  const Result minimized = invoke({"compose", "--op", "revcat", "--lhs", m, "--rhs", n,
                                   "--minimize", "--output", (dir.path / "out.json").string()});
  CHECK(minimized.out == "states=24 minimal=24\n");
  CHECK(parse_dfa_document(oracle::read_file((dir.path / "out.json").string())).state_count() ==
        24);

  const Result dot = invoke({"compose", "--op", "revcat", "--lhs", m, "--rhs", n, "--format", "dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out == invoke({"compose", "--op", "revcat", "--lhs", m, "--rhs", n, "--format", "dot"}).out);

  SUBCASE("direct and oracle agree on star-catenation") {
    const std::string a = dir.write("a.json", emit_document(starcat_witness_A(3)));
    const std::string b = dir.write("b.json", emit_document(starcat_witness_B(3)));
    const auto summary = [&](const char* method) {
      const auto last = lines(invoke({"compose", "--op", "starcat", "--lhs", a, "--rhs", b,
                                      "--method", method})
                                  .out)
                            .back();
      return last.substr(last.find("minimal="));
    };
    CHECK(summary("direct") == "minimal=29");
    CHECK(summary("oracle") == "minimal=29");
  }

  SUBCASE("malformed operands") {
    const std::string broken = dir.write(
        "broken.json", R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 2, "initial": 0,
        "finals": [1], "transitions": {"a": [1, 0]}})");
    const Result r = invoke({"compose", "--op", "revcat", "--lhs", broken, "--rhs", n});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("transitions.b") != std::string::npos);
    CHECK(invoke({"compose", "--op", "revcat", "--lhs", (dir.path / "missing.json").string(),
                  "--rhs", n})
              .code == cli::kUsage);
    const std::string other = dir.write("other.json", emit_document(starcat_special_witness_B(2)));
    CHECK(invoke({"compose", "--op", "revcat", "--lhs", m, "--rhs", other}).code == cli::kUsage);
    CHECK(invoke({"compose", "--op", "revcat", "--lhs", m}).code == cli::kUsage);
  }
}

TEST_CASE("search") {
  TempDir dir;
  const Result r = invoke({"search", "--op", "revcat", "--m", "1", "--n", "2", "--sigma", "2",
                           "--out-dir", dir.path.string()});
  REQUIRE(r.code == cli::kOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == "op=revcat m=1 n=2 sigma=2 max_minimal=2 pairs_examined=128");
  const fs::path lhs = dir.path / "search-revcat-m1-n2-s2-lhs.json";
  const fs::path rhs = dir.path / "search-revcat-m1-n2-s2-rhs.json";
  CHECK(fs::exists(lhs));
  CHECK(fs::exists(rhs));
  CHECK(parse_dfa_document(oracle::read_file(lhs.string())).state_count() == 1);
  CHECK(parse_dfa_document(oracle::read_file(rhs.string())).state_count() == 2);

  const std::vector<std::string> sampled{"search", "--op",    "starcat", "--m",       "3",
                                         "--n",    "3",       "--sigma", "3",         "--sample",
                                         "40",     "--seed",  "5",       "--out-dir", dir.path.string()};
  const Result first = invoke(sampled);
  const Result second = invoke(sampled);
  CHECK(first.code == cli::kOk);
  CHECK(first.out == second.out);
  CHECK(lines(first.out)[0].find("pairs_examined=40") != std::string::npos);

  CHECK(invoke({"search", "--op", "revcat", "--m", "3", "--n", "3", "--sigma", "4"}).code ==
        cli::kUsage);
  CHECK(invoke({"search", "--op", "starcat-special", "--m", "2", "--n", "2", "--sigma", "2"})
            .code == cli::kUsage);
}

TEST_CASE("usage") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  const Result help = invoke({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("witness") != std::string::npos);
}
