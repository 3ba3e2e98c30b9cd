#include "saddle/linalg/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "saddle/errors.hpp"

namespace saddle::linalg {

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  // from_chars rejects a leading '+', which is legal in the exchange format.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw InvalidArgument("not a real number: '" + std::string(text) + "'");
  return value;
}

namespace {

struct Banner {
  bool symmetric = false;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Parsed {
  Banner banner;
  std::size_t rows = 0, cols = 0;
  std::vector<Triplet> entries;
};

std::size_t parse_index(const std::string& tok, const std::string& source, std::size_t line) {
  std::size_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw FormatError(source, line, "bad integer '" + tok + "'");
  return v;
}

Parsed parse(std::istream& in, const std::string& source) {
  Parsed p;
  std::string text;
  std::size_t line = 0;

  if (!std::getline(in, text)) throw FormatError(source, 0, "empty input");
  ++line;
  {
    std::istringstream hs(text);
    std::string tag, object, format, field, symmetry;
    hs >> tag >> object >> format >> field >> symmetry;
    if (tag != "%%MatrixMarket") throw FormatError(source, line, "missing %%MatrixMarket banner");
    if (lower(object) != "matrix" || lower(format) != "coordinate")
      throw FormatError(source, line, "only 'matrix coordinate' files are supported");
    field = lower(field);
    if (field != "real" && field != "integer" && field != "double")
      throw FormatError(source, line, "unsupported field '" + field + "'");
    symmetry = lower(symmetry);
    if (symmetry == "symmetric")
      p.banner.symmetric = true;
    else if (symmetry != "general")
      throw FormatError(source, line, "unsupported symmetry '" + symmetry + "'");
  }

  bool have_size = false;
  std::size_t declared = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto start = text.find_first_not_of(" \t\r");
    if (start == std::string::npos || text[start] == '%') continue;
    std::istringstream ls(text);
    std::string a, b, c, extra;
    ls >> a >> b >> c;
    if (c.empty()) throw FormatError(source, line, "expected three fields");
    if (ls >> extra) throw FormatError(source, line, "unexpected trailing field '" + extra + "'");
    if (!have_size) {
      p.rows = parse_index(a, source, line);
      p.cols = parse_index(b, source, line);
      declared = parse_index(c, source, line);
      if (p.rows == 0 || p.cols == 0) throw FormatError(source, line, "zero dimension");
      if (p.banner.symmetric && p.rows != p.cols)
        throw FormatError(source, line, "symmetric matrix must be square");
      p.entries.reserve(declared);
      have_size = true;
      continue;
    }
    const std::size_t i = parse_index(a, source, line);
    const std::size_t j = parse_index(b, source, line);
    if (i < 1 || i > p.rows || j < 1 || j > p.cols)
      throw FormatError(source, line, "index out of range");
    if (p.banner.symmetric && i < j)
      throw FormatError(source, line, "upper-triangle entry in a symmetric file");
    double v = 0.0;
    try {
      v = parse_real(c);
    } catch (const InvalidArgument& e) {
      throw FormatError(source, line, e.what());
    }
    if (p.entries.size() == declared)
      throw FormatError(source, line, "more entries than declared");
    p.entries.push_back({i - 1, j - 1, v});
  }
  if (!have_size) throw FormatError(source, line, "missing size line");
  if (p.entries.size() != declared)
    throw FormatError(source, line,
                      "declared " + std::to_string(declared) + " entries, found " +
                          std::to_string(p.entries.size()));
  return p;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string(), 0, "cannot open file");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot open for writing");
  return out;
}

}  // namespace

SymMatrix parse_sym_matrix(std::istream& in, const std::string& source) {
  Parsed p = parse(in, source);
  if (!p.banner.symmetric) throw FormatError(source, 1, "expected a symmetric matrix");
  return SymMatrix::from_triplets(p.rows, p.entries);
}

RectMatrix parse_rect_matrix(std::istream& in, const std::string& source) {
  Parsed p = parse(in, source);
  if (p.banner.symmetric) {
    const std::size_t stored = p.entries.size();
    for (std::size_t k = 0; k < stored; ++k) {
      const auto t = p.entries[k];
      if (t.row != t.col) p.entries.push_back({t.col, t.row, t.value});
    }
  }
  return RectMatrix::from_triplets(p.rows, p.cols, p.entries);
}

SymMatrix read_sym_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_sym_matrix(in, path.string());
}

RectMatrix read_rect_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_rect_matrix(in, path.string());
}

void write_matrix(std::ostream& out, const SymMatrix& m) {
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << m.order() << ' ' << m.order() << ' ' << m.nnz() << '\n';
  for (const auto& t : m.entries())
    out << t.col + 1 << ' ' << t.row + 1 << ' ' << format_real(t.value) << '\n';
}

void write_matrix(std::ostream& out, const RectMatrix& m) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (const auto& t : m.entries())
    out << t.row + 1 << ' ' << t.col + 1 << ' ' << format_real(t.value) << '\n';
}

void write_matrix(const std::filesystem::path& path, const SymMatrix& m) {
  auto out = open_out(path);
  write_matrix(out, m);
}

void write_matrix(const std::filesystem::path& path, const RectMatrix& m) {
  auto out = open_out(path);
  write_matrix(out, m);
}

}  // namespace saddle::linalg
