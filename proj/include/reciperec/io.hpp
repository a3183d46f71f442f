#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reciperec/sparse.hpp"

namespace reciperec::io {

std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path, const std::vector<std::string>& lines);

// RFC-3339 timestamp <-> seconds since the Unix epoch, always UTC.
std::int64_t parse_rfc3339(std::string_view s);
std::string format_rfc3339(std::int64_t seconds);

// --- binary container ------------------------------------------------------
//
// Checkpoints, feature matrices and study state all share one tagged-section
// layout: a magic string, then (tag, payload) sections. Numbers are raw
// little-endian; doubles are written bit-exact so identical runs produce
// identical files.

class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string& path);
  ~BinaryWriter();

  void magic(std::string_view m);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i64(std::int64_t v);
  void f64(double v);
  void str(std::string_view s);
  void vec_f64(const std::vector<double>& v);
  void vec_i64(const std::vector<std::int64_t>& v);
  void vec_i32(const std::vector<int>& v);
  void matrix(const Eigen::MatrixXd& m);
  void vector(const Eigen::VectorXd& v);
  void sparse(const SparseMatrix& m);
  void close();

 private:
  std::ofstream out_;
  std::string path_;
  void raw(const void* p, std::size_t n);
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::string& path);

  void magic(std::string_view expected);
  std::uint32_t u32();
  std::uint64_t u64();
  std::int64_t i64();
  double f64();
  std::string str();
  std::vector<double> vec_f64();
  std::vector<std::int64_t> vec_i64();
  std::vector<int> vec_i32();
  Eigen::MatrixXd matrix();
  Eigen::VectorXd vector();
  SparseMatrix sparse();

 private:
  std::ifstream in_;
  std::string path_;
  void raw(void* p, std::size_t n);
};

// --- TSV -------------------------------------------------------------------

std::vector<std::vector<std::string>> read_tsv(const std::string& path);
void write_tsv(const std::string& path, const std::vector<std::vector<std::string>>& rows);

bool file_exists(const std::string& path);
std::string join_path(const std::string& dir, const std::string& name);

}  // namespace reciperec::io
