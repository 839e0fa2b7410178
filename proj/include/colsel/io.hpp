#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "colsel/matrix.hpp"

namespace colsel {

/// On-disk matrix encodings.
///   csv:        one row per line, comma-separated decimals
///   coordinate: "m n nnz" header, then nnz lines "row col value" (0-based);
///               unlisted entries are zero, repeated entries are summed
///   binary:     "CSELMAT1", u64 m, u64 n (little-endian), then m*n
///               little-endian IEEE-754 doubles in column-major order
enum class MatrixFormat { csv, coordinate, binary };

std::string_view to_string(MatrixFormat format);
MatrixFormat parse_matrix_format(std::string_view name);
/// Guesses from the extension: .csv, .coo/.mtx/.txt, .bin. Throws InvalidArgument otherwise.
MatrixFormat infer_matrix_format(const std::filesystem::path& path);

inline constexpr std::string_view kBinaryMagic = "CSELMAT1";

Matrix read_matrix(std::istream& in, MatrixFormat format);
void write_matrix(std::ostream& out, const Matrix& m, MatrixFormat format);

Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format);
void save_matrix(const Matrix& m, const std::filesystem::path& path, MatrixFormat format);

}  // namespace colsel
