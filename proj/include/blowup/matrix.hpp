#pragma once

#include <cstdint>
#include <vector>

#include "blowup/modp.hpp"

namespace blowup {

// Dense row-major matrix over F_p. Row operations run through the
// runtime-dispatched mod-p kernels.
class ModpMatrix {
 public:
  ModpMatrix(const PrimeField& f, size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t get(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v) { data_[r * cols_ + c] = v; }
  uint32_t* row(size_t r) { return data_.data() + r * cols_; }
  const uint32_t* row(size_t r) const { return data_.data() + r * cols_; }

  void add_row(const std::vector<uint32_t>& r);

  // In-place reduced row echelon form. Returns the rank; pivot columns are
  // available afterwards. Rows of zeros sink to the bottom.
  size_t rref();
  size_t rank_of_copy() const;
  const std::vector<size_t>& pivot_cols() const { return pivots_; }
  bool in_rref() const { return in_rref_; }

  // Reduce v against the rref rows; returns the remainder. v is in the row
  // span iff the remainder is zero. Requires rref() to have run.
  std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;
  bool in_row_span(const std::vector<uint32_t>& v) const;

  const PrimeField& field() const { return f_; }

 private:
  PrimeField f_;
  size_t rows_, cols_;
  std::vector<uint32_t> data_;
  std::vector<size_t> pivots_;
  bool in_rref_ = false;
};

}  // namespace blowup
