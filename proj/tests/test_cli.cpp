#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <zlib.h>

#include "cli.hpp"

namespace fs = std::filesystem;
using artin::cli::run;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("artin_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("primes lists the twelve primes below 100") {
  TempDir tmp;
  const auto out = tmp.file("p.txt");
  REQUIRE(run({"primes", "--u", "2", "--limit", "100", "--output", out}) == 0);
  CHECK(lines(slurp(out)) ==
        std::vector<std::string>{"3", "5", "11", "13", "19", "29", "37", "53", "59", "61", "67", "83"});
}

TEST_CASE("counts-only and count-file") {
  TempDir tmp;
  const auto out = tmp.file("c.csv"), side = tmp.file("side.csv");
  REQUIRE(run({"integers", "--x", "1e4", "--counts-only", "--output", out}) == 0);
  const auto rows = lines(slurp(out));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "u,x,count,elapsed_ms");
  CHECK(rows[1].rfind("2,10000,2645,", 0) == 0);
  REQUIRE(run({"primes", "--limit", "1000", "--count-file", side, "--output", tmp.file("m.txt")}) == 0);
  CHECK(lines(slurp(side))[1].rfind("2,1000,67,", 0) == 0);
  CHECK(lines(slurp(tmp.file("m.txt"))).size() == 67);
}

TEST_CASE("gzip member lists") {
  TempDir tmp;
  const auto out = tmp.file("m.gz");
  REQUIRE(run({"integers", "--limit", "75", "--gzip", "--output", out}) == 0);
  gzFile gz = gzopen(out.c_str(), "rb");
  REQUIRE(gz);
  char buf[4096];
  const int n = gzread(gz, buf, sizeof buf);
  gzclose(gz);
  REQUIRE(n > 0);
  CHECK(lines(std::string(buf, n)).size() == 26);
  CHECK(run({"integers", "--limit", "75", "--gzip"}) == 1);
}

TEST_CASE("wieferich and wset") {
  TempDir tmp;
  const auto out = tmp.file("w.csv");
  REQUIRE(run({"wieferich", "--u", "2", "--limit", "10000", "--output", out}) == 0);
  CHECK(lines(slurp(out)) == std::vector<std::string>{"u,p", "2,1093", "2,3511"});
  REQUIRE(run({"wset", "--u", "5", "--limit", "1e4", "--output", out}) == 0);
  CHECK(lines(slurp(out)) == std::vector<std::string>{"u,p,order_mod_p,order_mod_p2", "5,2,1,1"});
  CHECK(run({"wieferich", "--limit", "5000000000"}) == 1);
}

TEST_CASE("verify shape") {
  TempDir tmp;
  const auto out = tmp.file("v.csv");
  REQUIRE(run({"verify", "--formula", "PI_U", "--grid", "1e4,1e5,1e6", "--output", out}) == 0);
  const auto rows = lines(slurp(out));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "formula_id,x,empirical,predicted,ratio");
  CHECK(rows[3].rfind("PI_U,1000000,29341,", 0) == 0);
  REQUIRE(run({"verify", "--formula", "N2", "--grid", "1e4", "--plot-data", "--output", out}) == 0);
  CHECK(lines(slurp(out))[0] == "x,ratio");
  CHECK(run({"verify", "--formula", "N3", "--grid", "1e4"}) == 1);
  CHECK(run({"verify", "--grid", "1.5e3,2"}) == 1);
}

TEST_CASE("admissibility is enforced with an override") {
  TempDir tmp;
  CHECK(run({"primes", "--u", "4", "--limit", "100"}) == 1);
  CHECK(run({"primes", "--u", "1", "--limit", "100"}) == 1);
  CHECK(run({"primes", "--u", "4", "--limit", "100", "--allow-inadmissible", "--output", tmp.file("x")}) == 0);
  CHECK(slurp(tmp.file("x")).empty());
}

TEST_CASE("usage errors") {
  CHECK(run(std::vector<std::string>{}) == 1);
  CHECK(run({"primes", "--bogus"}) == 1);
  CHECK(run({"primes", "--limit", "1.5"}) == 1);
  CHECK(run({"classify"}) == 1);
  CHECK(run({"expsum", "--kind", "full", "--p", "8"}) == 1);
  CHECK(run({"expsum", "--kind", "nope", "--p", "7"}) == 1);
}

TEST_CASE("sieve ceiling from the environment") {
  ::setenv("ARTIN_SIEVE_LIMIT", "1000", 1);
  CHECK(artin::cli::sieve_ceiling() == 1000);
  CHECK(run({"integers", "--limit", "5000"}) == 1);
  ::unsetenv("ARTIN_SIEVE_LIMIT");
  CHECK(artin::cli::sieve_ceiling() == 100'000'000);
}

TEST_CASE("failed writes leave nothing behind") {
  TempDir tmp;
  const auto bad = tmp.file("missing/dir/out.csv");
  CHECK(run({"classify", "--n", "45", "--output", bad}) != 0);
  CHECK_FALSE(fs::exists(bad));
  CHECK(fs::is_empty(tmp.path));
}

TEST_CASE("output does not depend on the worker count") {
  TempDir tmp;
  for (std::string cmd : {"integers", "primes", "wieferich"}) {
    REQUIRE(run({cmd, "--limit", "300000", "--workers", "1", "--output", tmp.file("a")}) == 0);
    REQUIRE(run({cmd, "--limit", "300000", "--workers", "4", "--output", tmp.file("b")}) == 0);
    CHECK(slurp(tmp.file("a")) == slurp(tmp.file("b")));
  }
}

TEST_CASE("csv and json carry the same fields") {
  TempDir tmp;
  const std::vector<std::vector<std::string>> cmds = {
      {"classify", "--n", "45"},
      {"classify", "--n", "10"},
      {"constants", "--alpha-bound", "1e5"},
      {"verify", "--grid", "1e3,1e4"},
      {"expsum", "--kind", "v", "--p", "11", "--param", "1"},
      {"expsum", "--kind", "bound", "--x", "100"},
      {"psi-check", "--limit", "50"},
      {"wset", "--u", "5", "--limit", "100"},
  };
  for (auto cmd : cmds) {
    auto csv = cmd, json = cmd;
    csv.insert(csv.end(), {"--format", "csv", "--output", tmp.file("o.csv")});
    json.insert(json.end(), {"--format", "json", "--output", tmp.file("o.json")});
    REQUIRE(run(csv) == 0);
    REQUIRE(run(json) == 0);
    const auto rows = lines(slurp(tmp.file("o.csv")));
    const auto j = nlohmann::json::parse(slurp(tmp.file("o.json")));
    REQUIRE(j.is_array());
    REQUIRE(j.size() + 1 == rows.size());
    std::vector<std::string> cols;
    std::stringstream header(rows[0]);
    for (std::string c; std::getline(header, c, ',');) cols.push_back(c);
    for (const auto& obj : j) {
      CHECK(obj.size() == cols.size());
      for (const auto& c : cols) CHECK(obj.contains(c));
    }
  }
}

TEST_CASE("json reals carry decimal and hex") {
  TempDir tmp;
  REQUIRE(run({"constants", "--alpha-bound", "1000", "--format", "json", "--output", tmp.file("c.json")}) == 0);
  const auto j = nlohmann::json::parse(slurp(tmp.file("c.json")));
  const auto& v = j[0]["value"];
  CHECK(v["decimal"].get<std::string>().rfind("0.37", 0) == 0);
  const long double back = std::strtold(v["hex"].get<std::string>().c_str(), nullptr);
  CHECK(artin::cli::format_real(back) == v["decimal"].get<std::string>());
}

TEST_CASE("constants table rows") {
  TempDir tmp;
  REQUIRE(run({"constants", "--output", tmp.file("c.csv")}) == 0);
  const auto rows = lines(slurp(tmp.file("c.csv")));
  CHECK(rows[0] == "name,value,truncation,tail_bound,convention");
  std::vector<std::string> names;
  for (std::size_t i = 1; i < rows.size(); ++i) names.push_back(rows[i].substr(0, rows[i].find(',')));
  for (std::string want : {"alpha", "beta", "gamma_u", "nu", "kappa", "kappa_empirical", "wieferich_product",
                           "beta1_times_alpha", "euler_gamma_times_alpha"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("expsum kinds") {
  TempDir tmp;
  const auto out = tmp.file("e.csv");
  REQUIRE(run({"expsum", "--kind", "full", "--p", "7", "--param", "0", "--output", out}) == 0);
  auto rows = lines(slurp(out));
  CHECK(rows[0] == "p,kind,param,re,im,modulus");
  CHECK(rows[1].rfind("7,FullAdditive,0,7,", 0) == 0);
  CHECK(rows[2].rfind("7,FullAdditivePunctured,0,6,", 0) == 0);
  REQUIRE(run({"expsum", "--kind", "theta", "--p", "11", "--theta", "2", "--t", "10", "--param", "1", "--output", out}) == 0);
  CHECK(lines(slurp(out))[1].rfind("11,ThetaPower,1,-1,", 0) == 0);
  REQUIRE(run({"expsum", "--kind", "exact", "--p", "13", "--param", "1", "--output", out}) == 0);
  CHECK(lines(slurp(out))[1].rfind("13,ExactOrderCharacter,1,4,", 0) == 0);
  REQUIRE(run({"expsum", "--kind", "u", "--p", "13", "--param", "2", "--output", out}) == 0);
  REQUIRE(run({"expsum", "--kind", "bound", "--x", "1000", "--output", out}) == 0);
  CHECK(lines(slurp(out))[0] == "p,max_modulus,phi_bound,envelope");
  CHECK(run({"expsum", "--kind", "theta", "--p", "11", "--theta", "4", "--t", "6", "--param", "1"}) == 1);
}

TEST_CASE("psi-check and classify") {
  TempDir tmp;
  const auto out = tmp.file("o.csv");
  REQUIRE(run({"psi-check", "--output", out}) == 0);
  CHECK(lines(slurp(out))[1].rfind("46,", 0) == 0);
  REQUIRE(run({"classify", "--n", "45", "--output", out}) == 0);
  CHECK(lines(slurp(out))[1] == "2,45,InN,12,12");
  REQUIRE(run({"classify", "--n", "10", "--output", out}) == 0);
  CHECK(lines(slurp(out))[1] == "2,10,Neither,4,");
  CHECK(run({"psi-check", "--limit", "20000"}) == 1);
}

TEST_CASE("exact integer parsing") {
  using artin::cli::parse_exact_integer;
  CHECK(parse_exact_integer("1e6") == 1'000'000);
  CHECK(parse_exact_integer("2.5e3") == 2500);
  CHECK(parse_exact_integer("1000") == 1000);
  CHECK(parse_exact_integer("1E2") == 100);
  CHECK(parse_exact_integer("18446744073709551615") == UINT64_MAX);
  CHECK_THROWS(parse_exact_integer("1.5"));
  CHECK_THROWS(parse_exact_integer("1e-1"));
  CHECK_THROWS(parse_exact_integer("abc"));
  CHECK_THROWS(parse_exact_integer("1e20"));
  CHECK_THROWS(parse_exact_integer(""));
  CHECK(artin::cli::parse_grid("1e3,1e4,,1e5") == std::vector<std::uint64_t>{1000, 10'000, 100'000});
}
