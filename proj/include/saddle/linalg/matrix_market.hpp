#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "saddle/linalg/rect_matrix.hpp"
#include "saddle/linalg/sym_matrix.hpp"

namespace saddle::linalg {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_real(double x);
/// Parses a whole token as a double; throws InvalidArgument on trailing junk.
double parse_real(std::string_view text);

// Matrix Market "coordinate real" files, 1-based. Symmetric files carry the
// lower triangle. Parse errors raise FormatError with the offending line.
SymMatrix parse_sym_matrix(std::istream& in, const std::string& source = "<stream>");
RectMatrix parse_rect_matrix(std::istream& in, const std::string& source = "<stream>");
SymMatrix read_sym_matrix(const std::filesystem::path& path);
RectMatrix read_rect_matrix(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const SymMatrix& m);
void write_matrix(std::ostream& out, const RectMatrix& m);
void write_matrix(const std::filesystem::path& path, const SymMatrix& m);
void write_matrix(const std::filesystem::path& path, const RectMatrix& m);

}  // namespace saddle::linalg
