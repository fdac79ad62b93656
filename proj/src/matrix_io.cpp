#include "mmm/matrix_io.hpp"

#include <bit>
#include <cstdio>
#include <memory>

namespace mmm {

static_assert(std::endian::native == std::endian::little,
              "the MMMB format is little-endian and this port assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'M', 'M', 'M', 'B'};
constexpr uint32_t kVersion = 1;

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
  std::FILE* f = std::fopen(path.c_str(), mode);
  if (!f) throw IoError("cannot open " + path);
  return FilePtr(f);
}

void write_raw(std::FILE* f, const void* p, size_t bytes, const std::string& path) {
  if (std::fwrite(p, 1, bytes, f) != bytes) throw IoError("short write to " + path);
}

void read_raw(std::FILE* f, void* p, size_t bytes, const std::string& path) {
  if (std::fread(p, 1, bytes, f) != bytes) throw TruncatedFileError("truncated payload in " + path);
}

struct Header {
  uint32_t dtype_code;
  uint64_t rows;
  uint64_t cols;
};

Header read_header(std::FILE* f, const std::string& path) {
  char magic[4];
  if (std::fread(magic, 1, 4, f) != 4) throw TruncatedFileError("truncated header in " + path);
  if (std::memcmp(magic, kMagic, 4) != 0) throw BadMagicError("bad magic in " + path);
  uint32_t version = 0;
  read_raw(f, &version, sizeof version, path);
  if (version != kVersion)
    throw MatrixFileError("unsupported format version in " + path);
  Header h{};
  read_raw(f, &h.dtype_code, sizeof h.dtype_code, path);
  if (h.dtype_code > 1) throw UnknownDtypeError("unknown dtype code in " + path);
  read_raw(f, &h.rows, sizeof h.rows, path);
  read_raw(f, &h.cols, sizeof h.cols, path);
  if (h.rows == 0 || h.cols == 0) throw MatrixFileError("zero dimension in " + path);
  return h;
}

template <typename T>
void write_impl(const Matrix<T>& m, const std::string& path) {
  FilePtr f = open_file(path, "wb");
  write_raw(f.get(), kMagic, 4, path);
  write_raw(f.get(), &kVersion, sizeof kVersion, path);
  const uint32_t dtype_code = static_cast<uint32_t>(dtype_of<T>());
  write_raw(f.get(), &dtype_code, sizeof dtype_code, path);
  const uint64_t rows = m.rows(), cols = m.cols();
  write_raw(f.get(), &rows, sizeof rows, path);
  write_raw(f.get(), &cols, sizeof cols, path);
  for (int64_t i = 0; i < m.rows(); ++i) write_raw(f.get(), m.row(i), sizeof(T) * m.cols(), path);
  if (std::fflush(f.get()) != 0) throw IoError("flush failed for " + path);
}

template <typename T>
Matrix<T> read_impl(std::FILE* f, const Header& h, LaneConfig lane, const std::string& path) {
  if (lane.p == 0) lane = LaneConfig::defaults(dtype_of<T>());
  Matrix<T> m(static_cast<int64_t>(h.rows), static_cast<int64_t>(h.cols), lane);
  for (int64_t i = 0; i < m.rows(); ++i) read_raw(f, m.row(i), sizeof(T) * m.cols(), path);
  return m;
}

}  // namespace

void write_matrix(const Matrix<float>& m, const std::string& path) { write_impl(m, path); }
void write_matrix(const Matrix<double>& m, const std::string& path) { write_impl(m, path); }

Dtype peek_dtype(const std::string& path) {
  FilePtr f = open_file(path, "rb");
  return static_cast<Dtype>(read_header(f.get(), path).dtype_code);
}

AnyMatrix read_matrix_any(const std::string& path, LaneConfig lane) {
  FilePtr f = open_file(path, "rb");
  const Header h = read_header(f.get(), path);
  if (h.dtype_code == static_cast<uint32_t>(Dtype::f32))
    return read_impl<float>(f.get(), h, lane, path);
  return read_impl<double>(f.get(), h, lane, path);
}

}  // namespace mmm
