#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace reciperec {

// Row-compressed sparse matrix. Stored values are doubles so that matrix
// algebra (profiles, interaction sums) can be checked against dense oracles
// at tight tolerances.
class SparseMatrix {
 public:
  struct Triplet {
    int row;
    int col;
    double value;
  };

  struct RowView {
    const int* cols = nullptr;
    const double* vals = nullptr;
    std::size_t size = 0;
  };

  SparseMatrix() : rows_(0), cols_(0), row_ptr_{0} {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  // Duplicates are summed; exact zeros after summation are dropped.
  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets,
                                    bool drop_zeros = true);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return col_.size(); }

  RowView row(int r) const {
    std::size_t b = row_ptr_[r], e = row_ptr_[r + 1];
    return RowView{col_.data() + b, val_.data() + b, e - b};
  }

  double row_sum(int r) const {
    double s = 0.0;
    RowView v = row(r);
    for (std::size_t i = 0; i < v.size; ++i) s += v.vals[i];
    return s;
  }

  // Value at (r, c); zero when absent. Linear scan, fine for narrow rows.
  double at(int r, int c) const {
    RowView v = row(r);
    for (std::size_t i = 0; i < v.size; ++i)
      if (v.cols[i] == c) return v.vals[i];
    return 0.0;
  }

  Eigen::MatrixXd to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
      RowView v = row(r);
      for (std::size_t i = 0; i < v.size; ++i) m(r, v.cols[i]) = v.vals[i];
    }
    return m;
  }

  const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_indices() const { return col_; }
  const std::vector<double>& values() const { return val_; }

  // Raw constructor for deserialization; validates monotone row pointers.
  static SparseMatrix from_csr(int rows, int cols, std::vector<std::int64_t> row_ptr,
                               std::vector<int> col, std::vector<double> val);

 private:
  int rows_;
  int cols_;
  std::vector<std::int64_t> row_ptr_;
  std::vector<int> col_;
  std::vector<double> val_;
};

}  // namespace reciperec
