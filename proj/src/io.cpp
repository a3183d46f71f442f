#include "reciperec/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <sstream>

namespace reciperec::io {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  for (const std::string& l : lines) out << l << '\n';
}

namespace {

// days since epoch for a civil date (Howard Hinnant's algorithm)
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += (m <= 2);
}

}  // namespace

std::int64_t parse_rfc3339(std::string_view s) {
  // YYYY-MM-DDThh:mm:ss[.frac](Z|±hh:mm)
  int year, month, day, hour, minute, second;
  int n = 0;
  std::string buf(s);
  if (std::sscanf(buf.c_str(), "%4d-%2d-%2d%*1[Tt ]%2d:%2d:%2d%n", &year, &month, &day, &hour,
                  &minute, &second, &n) != 6 || n == 0)
    throw std::invalid_argument("bad RFC-3339 timestamp: " + buf);
  std::size_t pos = static_cast<std::size_t>(n);
  // skip fractional seconds
  if (pos < buf.size() && buf[pos] == '.') {
    ++pos;
    while (pos < buf.size() && buf[pos] >= '0' && buf[pos] <= '9') ++pos;
  }
  std::int64_t offset = 0;
  if (pos < buf.size()) {
    char c = buf[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      int oh, om;
      int m2 = 0;
      if (std::sscanf(buf.c_str() + pos + 1, "%2d:%2d%n", &oh, &om, &m2) != 2 || m2 == 0)
        throw std::invalid_argument("bad timezone offset: " + buf);
      offset = (c == '+' ? 1 : -1) * (oh * 3600 + om * 60);
      pos += 1 + static_cast<std::size_t>(m2);
    }
  }
  if (pos != buf.size()) throw std::invalid_argument("trailing characters in timestamp: " + buf);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60)
    throw std::invalid_argument("timestamp fields out of range: " + buf);
  std::int64_t days = days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
  return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

std::string format_rfc3339(std::int64_t seconds) {
  std::int64_t days = seconds / 86400;
  std::int64_t rem = seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  std::int64_t y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04" PRId64 "-%02u-%02uT%02d:%02d:%02dZ", y, m, d,
                static_cast<int>(rem / 3600), static_cast<int>((rem % 3600) / 60),
                static_cast<int>(rem % 60));
  return buf;
}

// --- binary container --------------------------------------------------------

BinaryWriter::BinaryWriter(const std::string& path) : out_(path, std::ios::binary), path_(path) {
  if (!out_) throw std::runtime_error("cannot write file: " + path);
}

BinaryWriter::~BinaryWriter() = default;

void BinaryWriter::raw(const void* p, std::size_t n) {
  out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
  if (!out_) throw std::runtime_error("write failed: " + path_);
}

void BinaryWriter::magic(std::string_view m) { raw(m.data(), m.size()); }
void BinaryWriter::u32(std::uint32_t v) { raw(&v, sizeof(v)); }
void BinaryWriter::u64(std::uint64_t v) { raw(&v, sizeof(v)); }
void BinaryWriter::i64(std::int64_t v) { raw(&v, sizeof(v)); }
void BinaryWriter::f64(double v) { raw(&v, sizeof(v)); }

void BinaryWriter::str(std::string_view s) {
  u64(s.size());
  raw(s.data(), s.size());
}

void BinaryWriter::vec_f64(const std::vector<double>& v) {
  u64(v.size());
  if (!v.empty()) raw(v.data(), v.size() * sizeof(double));
}

void BinaryWriter::vec_i64(const std::vector<std::int64_t>& v) {
  u64(v.size());
  if (!v.empty()) raw(v.data(), v.size() * sizeof(std::int64_t));
}

void BinaryWriter::vec_i32(const std::vector<int>& v) {
  u64(v.size());
  if (!v.empty()) raw(v.data(), v.size() * sizeof(int));
}

void BinaryWriter::matrix(const Eigen::MatrixXd& m) {
  u64(static_cast<std::uint64_t>(m.rows()));
  u64(static_cast<std::uint64_t>(m.cols()));
  if (m.size() > 0) raw(m.data(), static_cast<std::size_t>(m.size()) * sizeof(double));
}

void BinaryWriter::vector(const Eigen::VectorXd& v) {
  u64(static_cast<std::uint64_t>(v.size()));
  if (v.size() > 0) raw(v.data(), static_cast<std::size_t>(v.size()) * sizeof(double));
}

void BinaryWriter::sparse(const SparseMatrix& m) {
  u64(static_cast<std::uint64_t>(m.rows()));
  u64(static_cast<std::uint64_t>(m.cols()));
  vec_i64(m.row_ptr());
  vec_i32(m.col_indices());
  vec_f64(m.values());
}

void BinaryWriter::close() {
  out_.close();
  if (!out_) throw std::runtime_error("close failed: " + path_);
}

BinaryReader::BinaryReader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
  if (!in_) throw std::runtime_error("cannot open file: " + path);
}

void BinaryReader::raw(void* p, std::size_t n) {
  in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in_.gcount()) != n)
    throw std::runtime_error("truncated file: " + path_);
}

void BinaryReader::magic(std::string_view expected) {
  std::string got(expected.size(), '\0');
  raw(got.data(), got.size());
  if (got != expected) throw std::runtime_error("bad magic in " + path_);
}

std::uint32_t BinaryReader::u32() {
  std::uint32_t v;
  raw(&v, sizeof(v));
  return v;
}
std::uint64_t BinaryReader::u64() {
  std::uint64_t v;
  raw(&v, sizeof(v));
  return v;
}
std::int64_t BinaryReader::i64() {
  std::int64_t v;
  raw(&v, sizeof(v));
  return v;
}
double BinaryReader::f64() {
  double v;
  raw(&v, sizeof(v));
  return v;
}

std::string BinaryReader::str() {
  std::uint64_t n = u64();
  std::string s(n, '\0');
  if (n) raw(s.data(), n);
  return s;
}

std::vector<double> BinaryReader::vec_f64() {
  std::uint64_t n = u64();
  std::vector<double> v(n);
  if (n) raw(v.data(), n * sizeof(double));
  return v;
}

std::vector<std::int64_t> BinaryReader::vec_i64() {
  std::uint64_t n = u64();
  std::vector<std::int64_t> v(n);
  if (n) raw(v.data(), n * sizeof(std::int64_t));
  return v;
}

std::vector<int> BinaryReader::vec_i32() {
  std::uint64_t n = u64();
  std::vector<int> v(n);
  if (n) raw(v.data(), n * sizeof(int));
  return v;
}

Eigen::MatrixXd BinaryReader::matrix() {
  std::uint64_t r = u64(), c = u64();
  Eigen::MatrixXd m(r, c);
  if (m.size() > 0) raw(m.data(), static_cast<std::size_t>(m.size()) * sizeof(double));
  return m;
}

Eigen::VectorXd BinaryReader::vector() {
  std::uint64_t n = u64();
  Eigen::VectorXd v(n);
  if (n) raw(v.data(), n * sizeof(double));
  return v;
}

SparseMatrix BinaryReader::sparse() {
  std::uint64_t r = u64(), c = u64();
  std::vector<std::int64_t> rp = vec_i64();
  std::vector<int> col = vec_i32();
  std::vector<double> val = vec_f64();
  return SparseMatrix::from_csr(static_cast<int>(r), static_cast<int>(c), std::move(rp),
                                std::move(col), std::move(val));
}

// --- TSV ---------------------------------------------------------------------

std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : read_lines(path)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

void write_tsv(const std::string& path, const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << '\t';
      out << row[i];
    }
    out << '\n';
  }
}

bool file_exists(const std::string& path) { return std::filesystem::exists(path); }

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

}  // namespace reciperec::io
