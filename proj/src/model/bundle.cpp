#include "saddle/model/bundle.hpp"

#include <fstream>

#include "saddle/errors.hpp"
#include "saddle/linalg/matrix_market.hpp"

namespace saddle::model {

namespace fs = std::filesystem;

void BundleHeader::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : fields_)
    if (k == key) {
      v = value;
      return;
    }
  fields_.emplace_back(key, value);
}

std::optional<std::string> BundleHeader::get(const std::string& key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return v;
  return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

BundleHeader read_header(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string(), 0, "cannot open header");
  BundleHeader h;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string t = trim(text);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw FormatError(path.string(), line, "expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw FormatError(path.string(), line, "empty key");
    h.set(key, trim(t.substr(eq + 1)));
  }
  return h;
}

void check_size(const BundleHeader& h, const fs::path& path, const char* key, std::size_t actual) {
  const auto v = h.get(key);
  if (!v) return;
  std::size_t declared = 0;
  try {
    std::size_t used = 0;
    declared = std::stoul(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
  } catch (const std::exception&) {
    throw FormatError(path.string(), 0, std::string("bad value for ") + key + ": '" + *v + "'");
  }
  if (declared != actual)
    throw FormatError(path.string(), 0,
                      std::string(key) + " = " + *v + " disagrees with the block files (" +
                          std::to_string(actual) + ")");
}

}  // namespace

void write_bundle(const fs::path& dir, const SaddleSystem& sys, BundleHeader header) {
  fs::create_directories(dir);
  linalg::write_matrix(dir / "A.mtx", sys.a());
  linalg::write_matrix(dir / "B.mtx", sys.b());
  if (sys.c())
    linalg::write_matrix(dir / "C.mtx", *sys.c());
  else
    fs::remove(dir / "C.mtx");

  BundleHeader out;
  out.set("m", std::to_string(sys.m()));
  out.set("n", std::to_string(sys.n()));
  out.set("c_block", sys.c() ? "present" : "zero");
  if (sys.m() < sys.n()) out.set("allow_m_lt_n", "true");
  for (const auto& [k, v] : header.fields())
    if (k != "m" && k != "n" && k != "c_block") out.set(k, v);

  std::ofstream h(dir / "header.txt");
  if (!h) throw Error((dir / "header.txt").string() + ": cannot open for writing");
  h << "# saddle-point bundle\n";
  for (const auto& [k, v] : out.fields()) h << k << " = " << v << '\n';
}

Bundle read_bundle(const fs::path& dir, const ValidationOptions& opts) {
  if (!fs::is_directory(dir)) throw FormatError(dir.string(), 0, "bundle directory not found");
  const fs::path header_path = dir / "header.txt";
  BundleHeader header = fs::exists(header_path) ? read_header(header_path) : BundleHeader{};

  auto a = linalg::read_sym_matrix(dir / "A.mtx");
  auto b = linalg::read_rect_matrix(dir / "B.mtx");
  std::optional<linalg::SymMatrix> c;
  if (fs::exists(dir / "C.mtx")) c = linalg::read_sym_matrix(dir / "C.mtx");

  check_size(header, header_path, "m", a.order());
  check_size(header, header_path, "n", b.cols());
  ValidationOptions o = opts;
  if (header.get("allow_m_lt_n") == std::optional<std::string>("true")) o.allow_m_lt_n = true;
  return Bundle{SaddleSystem::create(std::move(a), std::move(b), std::move(c), o),
                std::move(header)};
}

}  // namespace saddle::model
