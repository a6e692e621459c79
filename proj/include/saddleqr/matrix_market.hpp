#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "saddleqr/matrix.hpp"

namespace saddleqr::mm {

/// Dense "array real general" Matrix Market files: a header line, a
/// `rows cols` line, then column-major entries one per line printed with 17
/// significant digits so every binary64 value round-trips exactly.
void write(std::ostream& out, const DenseMatrix& a);
void write(const std::filesystem::path& path, const DenseMatrix& a);

/// Parses the array format. Comment lines (leading '%') after the header are
/// skipped. Errors carry ErrorCode::parse and name `source` and the line.
/// Non-finite entries are rejected.
[[nodiscard]] DenseMatrix read(std::istream& in, const std::string& source = "<stream>");
/// Throws ErrorCode::io if the file cannot be opened.
[[nodiscard]] DenseMatrix read(const std::filesystem::path& path);

/// Formats `v` with 17 significant digits (shortest-exact for binary64).
[[nodiscard]] std::string format_double(double v);

}  // namespace saddleqr::mm
