#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "mmm/matrix.hpp"

namespace mmm {

// Binary interchange format (little-endian):
//   magic "MMMB" | version u32 = 1 | dtype u32 (0 = f32, 1 = f64)
//   rows u64 | cols u64 | rows*cols elements row-major, no padding

struct MatrixFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadMagicError : MatrixFileError {
  using MatrixFileError::MatrixFileError;
};
struct TruncatedFileError : MatrixFileError {
  using MatrixFileError::MatrixFileError;
};
struct UnknownDtypeError : MatrixFileError {
  using MatrixFileError::MatrixFileError;
};
struct IoError : MatrixFileError {
  using MatrixFileError::MatrixFileError;
};

void write_matrix(const Matrix<float>& m, const std::string& path);
void write_matrix(const Matrix<double>& m, const std::string& path);

/// Dtype recorded in the file header (validates magic and version).
Dtype peek_dtype(const std::string& path);

using AnyMatrix = std::variant<Matrix<float>, Matrix<double>>;

/// Loads whichever element kind the file holds, rebuilding padding for the
/// given lane config (defaulted per dtype when p == 0).
AnyMatrix read_matrix_any(const std::string& path, LaneConfig lane = LaneConfig{0, 0, 0});

template <typename T>
Matrix<T> read_matrix(const std::string& path, LaneConfig lane = LaneConfig::defaults(dtype_of<T>())) {
  AnyMatrix m = read_matrix_any(path, lane);
  if (!std::holds_alternative<Matrix<T>>(m))
    throw UnknownDtypeError("file " + path + " holds a different element kind than requested");
  return std::get<Matrix<T>>(std::move(m));
}

}  // namespace mmm
