#include "saddleqr/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace saddleqr::mm {

namespace {

constexpr std::string_view header = "%%MatrixMarket matrix array real general";

[[noreturn]] void parse_error(const std::string& source, std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::parse, source + ":" + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write(std::ostream& out, const DenseMatrix& a) {
  out << header << '\n' << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out << format_double(a(i, j)) << '\n';
}

void write(const std::filesystem::path& path, const DenseMatrix& a) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path.string() + " for writing");
  write(out, a);
  if (!out) throw Error(ErrorCode::io, "write failed: " + path.string());
}

DenseMatrix read(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) parse_error(source, 1, "empty input");
  ++lineno;
  {
    std::istringstream hs{std::string(trim(line))};
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "array" ||
        lower(field) != "real" || lower(symmetry) != "general")
      parse_error(source, lineno, "expected header '" + std::string(header) + "'");
  }

  auto next_data_line = [&](std::string_view what) -> std::string_view {
    while (std::getline(in, line)) {
      ++lineno;
      const auto t = trim(line);
      if (t.empty() || t.front() == '%') continue;
      return t;
    }
    parse_error(source, lineno + 1, "unexpected end of input, expected " + std::string(what));
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  {
    const auto t = next_data_line("dimensions");
    std::istringstream ds{std::string(t)};
    std::string extra;
    if (!(ds >> rows >> cols) || (ds >> extra))
      parse_error(source, lineno, "expected 'rows cols'");
  }

  DenseMatrix a(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      const auto t = next_data_line("matrix entry");
      double v = 0.0;
      const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
      if (res.ec != std::errc() || res.ptr != t.data() + t.size())
        parse_error(source, lineno, "invalid number '" + std::string(t) + "'");
      if (!std::isfinite(v)) parse_error(source, lineno, "non-finite entry");
      a(i, j) = v;
    }
  }
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (!t.empty() && t.front() != '%') parse_error(source, lineno, "trailing data after entries");
  }
  return a;
}

DenseMatrix read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  return read(in, path.string());
}

}  // namespace saddleqr::mm
