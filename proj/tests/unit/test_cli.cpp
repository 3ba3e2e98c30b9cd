#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "saddle/cli/commands.hpp"
#include "saddle/cli/reference_tables.hpp"

using namespace saddle::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "saddle");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const char* name) {
  const auto p = fs::temp_directory_path() / ("saddle-cli-" + std::string(name));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("reference tables are complete") {
  CHECK(table1_reference().size() == 16);
  CHECK(table2_reference().size() == 18);
}

TEST_CASE("demo bundle analysis") {
  const auto dir = scratch("demo");
  REQUIRE(run_args({"gen", "--method", "demo", "--out", dir.string()}).code == exit_ok);
  const auto r = run_args({"analyze", dir.string()});
  REQUIRE(r.code == exit_ok);
  // header line then one data row; S = 2 and strict quasi-PF
  const auto row = r.out.substr(r.out.find('\n') + 1);
  CHECK(row.find(",2,+,") != std::string::npos);
  CHECK(row.find("true,true,true,false") != std::string::npos);
  CHECK(run_args({"analyze", dir.string()}).out == r.out);  // byte-stable
  fs::remove_all(dir);
}

TEST_CASE("Stokes bundle bounds contain the computed extremes") {
  const auto dir = scratch("p1p0");
  REQUIRE(run_args({"gen", "--method", "p1p0", "--ne", "4", "--tau", "1", "--out", dir.string()}).code ==
          exit_ok);
  const auto r = run_args({"bounds", dir.string()});
  REQUIRE(r.code == exit_ok);
  CHECK(r.out.find("rusten_winther,corrected,true,") != std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line.ends_with(",0,"));  // no audited eigenvalue outside
  fs::remove_all(dir);
}

TEST_CASE("rank-deficient B reports an inapplicable theorem") {
  const auto dir = scratch("rank");
  fs::create_directories(dir);
  std::ofstream(dir / "A.mtx") << "%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 1\n2 2 2\n";
  std::ofstream(dir / "B.mtx")
      << "%%MatrixMarket matrix coordinate real general\n2 2 4\n1 1 1\n1 2 1\n2 1 1\n2 2 1\n";
  std::ofstream(dir / "header.txt") << "m = 2\nn = 2\n";
  const auto r = run_args({"bounds", dir.string(), "--format", "text"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("not applicable: hypothesis B full-column rank") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run_args({}).code == exit_config);
  CHECK(run_args({"frobnicate"}).code == exit_config);
  CHECK(run_args({"analyze", "--method", "demo", "--format", "xml"}).code == exit_config);
  CHECK(run_args({"analyze", "--method", "demo", "--variant", "other"}).code == exit_config);
  CHECK(run_args({"analyze", "--method", "demo", "--tol", "-1"}).code == exit_config);
  CHECK(run_args({"analyze", "--method", "p1p0", "--ne", "1", "--tau", "1"}).code == exit_config);
  CHECK(run_args({"analyze", "--method", "p1p0", "--ne", "4"}).code == exit_config);
  CHECK(run_args({"analyze", "--method", "q9", "--ne", "4", "--tau", "1"}).code == exit_config);
  CHECK(run_args({"gen", "--method", "p1p0", "--ne", "4", "--tau", "1"}).code == exit_config);
  CHECK(run_args({"analyze", "/nonexistent/bundle"}).code == exit_config);
  CHECK(run_args({"--help"}).code == exit_ok);
}

TEST_CASE("malformed bundle reports file and line") {
  const auto dir = scratch("bad");
  REQUIRE(run_args({"gen", "--method", "demo", "--out", dir.string()}).code == exit_ok);
  std::ofstream(dir / "B.mtx") << "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 x\n";
  const auto r = run_args({"analyze", dir.string()});
  CHECK(r.code == exit_config);
  CHECK(r.err.find("B.mtx:3") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("non-convergence exits with 3") {
  const auto r = run_args({"analyze", "--method", "p1p0", "--ne", "4", "--tau", "1", "--max-iter", "3"});
  CHECK(r.code == exit_nonconvergence);
}

TEST_CASE("flags override environment") {
  ::setenv("SADDLE_FORMAT", "text", 1);
  auto r = run_args({"analyze", "--method", "demo"});
  CHECK(r.out.rfind("system:", 0) == 0);
  r = run_args({"analyze", "--method", "demo", "--format", "csv"});
  CHECK(r.out.rfind("m,n,", 0) == 0);
  ::setenv("SADDLE_FORMAT", "xml", 1);
  CHECK(run_args({"analyze", "--method", "demo"}).code == exit_config);
  ::unsetenv("SADDLE_FORMAT");

  ::setenv("SADDLE_TAU", "1,10", 1);
  const auto dir = scratch("env");
  r = run_args({"gen", "--method", "p1p0", "--ne", "2", "--out", dir.string()});
  CHECK(r.code == exit_ok);
  CHECK(fs::exists(dir / "p1p0-ne2-tau10" / "A.mtx"));
  ::unsetenv("SADDLE_TAU");
  fs::remove_all(dir);
}

TEST_CASE("table rows can be filtered") {
  const auto r = run_args({"table2", "--ne", "8"});
  CHECK(r.code == exit_ok);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 1 + 4);
}

TEST_CASE("perturbed oracle makes the selftest fail") {
  const auto r = run_args({"selftest", "--oracle-perturbation", "1e-3"});
  CHECK(r.code == exit_property_failure);
  CHECK(r.out.find(",FAIL,") != std::string::npos);
}
