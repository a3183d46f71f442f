#include "reciperec/sparse.hpp"

#include <algorithm>

namespace reciperec {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets,
                                         bool drop_zeros) {
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw std::out_of_range("SparseMatrix: triplet outside shape");
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m(rows, cols);
  std::size_t i = 0;
  for (int r = 0; r < rows; ++r) {
    while (i < triplets.size() && triplets[i].row == r) {
      int c = triplets[i].col;
      double v = 0.0;
      while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
        v += triplets[i].value;
        ++i;
      }
      if (!drop_zeros || v != 0.0) {
        m.col_.push_back(c);
        m.val_.push_back(v);
      }
    }
    m.row_ptr_[r + 1] = static_cast<std::int64_t>(m.col_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::from_csr(int rows, int cols, std::vector<std::int64_t> row_ptr,
                                    std::vector<int> col, std::vector<double> val) {
  if (row_ptr.size() != static_cast<std::size_t>(rows) + 1 || row_ptr.front() != 0 ||
      row_ptr.back() != static_cast<std::int64_t>(col.size()) || col.size() != val.size())
    throw std::invalid_argument("SparseMatrix: inconsistent CSR arrays");
  for (std::size_t i = 1; i < row_ptr.size(); ++i)
    if (row_ptr[i] < row_ptr[i - 1]) throw std::invalid_argument("SparseMatrix: row_ptr not monotone");
  for (int c : col)
    if (c < 0 || c >= cols) throw std::out_of_range("SparseMatrix: column outside shape");
  SparseMatrix m(rows, cols);
  m.row_ptr_ = std::move(row_ptr);
  m.col_ = std::move(col);
  m.val_ = std::move(val);
  return m;
}

}  // namespace reciperec
