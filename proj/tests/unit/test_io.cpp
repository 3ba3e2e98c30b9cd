#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "helpers.hpp"
#include "saddle/errors.hpp"
#include "saddle/linalg/matrix_market.hpp"
#include "saddle/model/bundle.hpp"
#include "saddle/verify/random_instances.hpp"

using namespace saddle;
using namespace saddle::linalg;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const char* name) {
  const auto p = fs::temp_directory_path() / ("saddle-unit-" + std::string(name));
  fs::remove_all(p);
  return p;
}

bool same(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order() || a.nnz() != b.nnz()) return false;
  for (std::size_t k = 0; k < a.nnz(); ++k) {
    const auto &x = a.entries()[k], &y = b.entries()[k];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

bool same(const RectMatrix& a, const RectMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.nnz() != b.nnz()) return false;
  for (std::size_t k = 0; k < a.nnz(); ++k) {
    const auto &x = a.entries()[k], &y = b.entries()[k];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("real formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 76.95595469, std::numeric_limits<double>::max(),
                   std::numeric_limits<double>::denorm_min()})
    CHECK(parse_real(format_real(x)) == x);
  CHECK(parse_real("1.2345678901234567e-3") == 1.2345678901234567e-3);
  CHECK_THROWS_AS(parse_real("1.0x"), InvalidArgument);
}

TEST_CASE("symmetric matrix market round trip") {
  verify::InstanceGenerator gen(3);
  const auto m = gen.spd(12);
  std::stringstream s;
  write_matrix(s, m);
  CHECK(s.str().rfind("%%MatrixMarket matrix coordinate real symmetric", 0) == 0);
  CHECK(same(parse_sym_matrix(s), m));
}

TEST_CASE("general matrix market round trip") {
  verify::InstanceGenerator gen(4);
  const auto b = gen.gaussian(9, 4);
  std::stringstream s;
  write_matrix(s, b);
  CHECK(same(parse_rect_matrix(s), b));
}

TEST_CASE("matrix market parsing") {
  std::istringstream ok(
      "%%MatrixMarket matrix coordinate real symmetric\n% comment\n2 2 2\n1 1 4\n2 1 -1.5\n");
  const auto m = parse_sym_matrix(ok);
  CHECK(m.to_dense()(0, 1) == -1.5);

  std::istringstream upper("%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n1 2 1\n");
  CHECK_THROWS_AS(parse_sym_matrix(upper), FormatError);
  std::istringstream range("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n");
  CHECK_THROWS_AS(parse_rect_matrix(range), FormatError);
  std::istringstream shortfile("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n");
  CHECK_THROWS_AS(parse_rect_matrix(shortfile), FormatError);
  std::istringstream complex("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n");
  CHECK_THROWS_AS(parse_rect_matrix(complex), FormatError);

  std::istringstream bad("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 abc\n");
  try {
    (void)parse_rect_matrix(bad, "B.mtx");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("B.mtx:3") != std::string::npos);
  }
}

TEST_CASE("bundle round trip") {
  const auto dir = scratch("bundle");
  verify::InstanceGenerator gen(5);
  const auto sys = gen.saddle(10, 1.0);
  model::BundleHeader h;
  h.set("tau", "0.5");
  h.set("provenance", "unit");
  model::write_bundle(dir, sys, h);
  CHECK(fs::exists(dir / "A.mtx"));
  CHECK(fs::exists(dir / "B.mtx"));
  CHECK(fs::exists(dir / "header.txt"));

  const auto back = model::read_bundle(dir);
  CHECK(same(back.system.a(), sys.a()));
  CHECK(same(back.system.b(), sys.b()));
  CHECK(back.system.has_c() == sys.has_c());
  if (sys.has_c()) CHECK(same(*back.system.c(), *sys.c()));
  CHECK(back.header.get("tau") == std::optional<std::string>("0.5"));
  CHECK(back.header.get("m") == std::optional<std::string>(std::to_string(sys.m())));
  fs::remove_all(dir);
}

TEST_CASE("bundle without C and with bad header") {
  const auto dir = scratch("bundle-zero-c");
  model::write_bundle(dir, test::system(test::sym({{2}}), test::rect({{1}})), {});
  CHECK_FALSE(fs::exists(dir / "C.mtx"));
  CHECK_FALSE(model::read_bundle(dir).system.has_c());

  std::ofstream(dir / "header.txt") << "m = 3\nn = 1\n";
  CHECK_THROWS_AS(model::read_bundle(dir), FormatError);
  fs::remove(dir / "A.mtx");
  CHECK_THROWS_AS(model::read_bundle(dir), Error);
  fs::remove_all(dir);
}
