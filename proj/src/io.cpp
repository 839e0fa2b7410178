#include "colsel/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "colsel/error.hpp"

namespace colsel {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "cannot parse '" + std::string(token) + "' as a number");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite value '" + std::string(token) + "'");
  }
  return value;
}

std::uint64_t parse_count(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "cannot parse '" + std::string(token) + "' as a non-negative integer");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t at = 0;
  while (at < s.size()) {
    const auto begin = s.find_first_not_of(" \t\r", at);
    if (begin == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r", begin);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(begin, end - begin));
    at = end;
  }
  return out;
}

Matrix read_csv(std::istream& in) {
  std::vector<double> row_major;
  std::size_t width = 0;
  std::size_t rows = 0;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    std::size_t fields = 0;
    std::size_t at = 0;
    while (true) {
      const auto comma = text.find(',', at);
      const auto token = text.substr(at, comma == std::string_view::npos ? text.npos : comma - at);
      row_major.push_back(parse_real(token, number));
      ++fields;
      if (comma == std::string_view::npos) break;
      at = comma + 1;
    }
    if (rows == 0) {
      width = fields;
    } else if (fields != width) {
      throw ParseError(number, "expected " + std::to_string(width) + " fields, found " +
                                   std::to_string(fields));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(1, "empty csv matrix");
  Dense d(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * width + j];
    }
  }
  return Matrix(std::move(d));
}

Matrix read_coordinate(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  auto next_content = [&](std::string_view& text) {
    while (std::getline(in, line)) {
      ++number;
      text = trim(line);
      if (!text.empty() && text.front() != '%') return true;
    }
    return false;
  };

  std::string_view text;
  if (!next_content(text)) throw ParseError(number + 1, "missing 'm n nnz' header");
  const auto header = split_ws(text);
  if (header.size() != 3) throw ParseError(number, "header must be 'm n nnz'");
  const auto m = parse_count(header[0], number);
  const auto n = parse_count(header[1], number);
  const auto nnz = parse_count(header[2], number);
  if (m < 1 || n < 1) throw ParseError(number, "matrix dimensions must be positive");

  Dense d = Dense::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (std::uint64_t k = 0; k < nnz; ++k) {
    if (!next_content(text)) {
      throw ParseError(number + 1, "expected " + std::to_string(nnz) + " entries, found " +
                                       std::to_string(k));
    }
    const auto fields = split_ws(text);
    if (fields.size() != 3) throw ParseError(number, "entry must be 'row col value'");
    const auto i = parse_count(fields[0], number);
    const auto j = parse_count(fields[1], number);
    const double v = parse_real(fields[2], number);
    if (i >= m || j >= n) {
      throw BoundsError("line " + std::to_string(number) + ": entry (" + std::to_string(i) +
                        ", " + std::to_string(j) + ") outside " + std::to_string(m) + "x" +
                        std::to_string(n));
    }
    d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += v;
  }
  if (next_content(text)) throw ParseError(number, "more entries than the header declares");
  return Matrix(std::move(d));
}

template <typename T>
T from_little_endian(std::array<char, sizeof(T)> bytes) {
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  return std::bit_cast<T>(bytes);
}

template <typename T>
std::array<char, sizeof(T)> to_little_endian(T value) {
  auto bytes = std::bit_cast<std::array<char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  return bytes;
}

template <typename T>
T read_scalar(std::istream& in, const char* what) {
  std::array<char, sizeof(T)> bytes{};
  if (!in.read(bytes.data(), bytes.size())) {
    throw ParseError(0, std::string("truncated binary matrix while reading ") + what);
  }
  return from_little_endian<T>(bytes);
}

Matrix read_binary(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) ||
      std::string_view(magic.data(), magic.size()) != kBinaryMagic) {
    throw ParseError(0, "missing CSELMAT1 magic");
  }
  const auto m = read_scalar<std::uint64_t>(in, "row count");
  const auto n = read_scalar<std::uint64_t>(in, "column count");
  if (m < 1 || n < 1) throw ParseError(0, "matrix dimensions must be positive");
  constexpr auto kMaxEntries =
      static_cast<std::uint64_t>(std::numeric_limits<Eigen::Index>::max()) / sizeof(double);
  if (n > kMaxEntries / m) {
    throw ParseError(0, "declared size " + std::to_string(m) + "x" + std::to_string(n) +
                            " is too large");
  }
  Dense d(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (std::uint64_t k = 0; k < m * n; ++k) {
    const double v = read_scalar<double>(in, "payload");
    if (!std::isfinite(v)) throw ParseError(0, "non-finite payload entry " + std::to_string(k));
    d.data()[k] = v;
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw ParseError(0, "trailing bytes after binary payload");
  }
  return Matrix(std::move(d));
}

void append_real(std::string& out, double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  out.append(buf.data(), res.ptr);
}

void write_csv(std::ostream& out, const Matrix& m) {
  std::string text;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) text += ',';
      append_real(text, m(i, j));
    }
    text += '\n';
  }
  out << text;
}

void write_coordinate(std::ostream& out, const Matrix& m) {
  std::string body;
  std::size_t nnz = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 0.0) continue;
      ++nnz;
      body += std::to_string(i) + ' ' + std::to_string(j) + ' ';
      append_real(body, m(i, j));
      body += '\n';
    }
  }
  out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n' << body;
}

void write_binary(std::ostream& out, const Matrix& m) {
  out.write(kBinaryMagic.data(), static_cast<std::streamsize>(kBinaryMagic.size()));
  for (std::uint64_t dim : {std::uint64_t{m.rows()}, std::uint64_t{m.cols()}}) {
    const auto bytes = to_little_endian(dim);
    out.write(bytes.data(), bytes.size());
  }
  const double* data = m.dense().data();
  for (std::size_t k = 0; k < m.rows() * m.cols(); ++k) {
    const auto bytes = to_little_endian(data[k]);
    out.write(bytes.data(), bytes.size());
  }
}

}  // namespace

std::string_view to_string(MatrixFormat format) {
  switch (format) {
    case MatrixFormat::csv: return "csv";
    case MatrixFormat::coordinate: return "coordinate";
    case MatrixFormat::binary: return "binary";
  }
  return "unknown";
}

MatrixFormat parse_matrix_format(std::string_view name) {
  if (name == "csv") return MatrixFormat::csv;
  if (name == "coordinate") return MatrixFormat::coordinate;
  if (name == "binary") return MatrixFormat::binary;
  throw InvalidArgument("unknown matrix format '" + std::string(name) + "'");
}

MatrixFormat infer_matrix_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".csv") return MatrixFormat::csv;
  if (ext == ".coo" || ext == ".mtx" || ext == ".txt") return MatrixFormat::coordinate;
  if (ext == ".bin") return MatrixFormat::binary;
  throw InvalidArgument("cannot infer matrix format of '" + path.string() +
                        "'; pass --format explicitly");
}

Matrix read_matrix(std::istream& in, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::csv: return read_csv(in);
    case MatrixFormat::coordinate: return read_coordinate(in);
    case MatrixFormat::binary: return read_binary(in);
  }
  throw InvalidArgument("unknown matrix format");
}

void write_matrix(std::ostream& out, const Matrix& m, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::csv: write_csv(out, m); return;
    case MatrixFormat::coordinate: write_coordinate(out, m); return;
    case MatrixFormat::binary: write_binary(out, m); return;
  }
}

Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_matrix(in, format);
}

void save_matrix(const Matrix& m, const std::filesystem::path& path, MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_matrix(out, m, format);
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

}  // namespace colsel
