#include "blowup/matrix.hpp"

#include <cassert>

#include "blowup/errors.hpp"

namespace blowup {

ModpMatrix::ModpMatrix(const PrimeField& f, size_t rows, size_t cols)
    : f_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

void ModpMatrix::add_row(const std::vector<uint32_t>& r) {
  assert(r.size() == cols_);
  assert(!in_rref_);
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

size_t ModpMatrix::rref() {
  const auto& k = kernels::active();
  const uint32_t p = f_.p();
  const uint32_t mu = f_.barrett_mu();
  pivots_.clear();
  size_t lead = 0;
  for (size_t col = 0; col < cols_ && lead < rows_; ++col) {
    // find pivot
    size_t pr = lead;
    while (pr < rows_ && get(pr, col) == 0) ++pr;
    if (pr == rows_) continue;
    if (pr != lead) {
      for (size_t c = 0; c < cols_; ++c) {
        uint32_t t = get(lead, c);
        set(lead, c, get(pr, c));
        set(pr, c, t);
      }
    }
    uint32_t piv = get(lead, col);
    if (piv != 1) k.scale(row(lead), cols_, f_.inv(piv), p, mu);
    for (size_t r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      uint32_t v = get(r, col);
      if (v == 0) continue;
      k.axpy(row(r), row(lead), cols_, f_.neg(v), p, mu);
    }
    pivots_.push_back(col);
    ++lead;
  }
  in_rref_ = true;
  return pivots_.size();
}

size_t ModpMatrix::rank_of_copy() const {
  ModpMatrix m = *this;
  m.in_rref_ = false;
  return m.rref();
}

std::vector<uint32_t> ModpMatrix::reduce(std::vector<uint32_t> v) const {
  if (!in_rref_) throw kernel_error("ModpMatrix::reduce requires rref");
  assert(v.size() == cols_);
  const auto& k = kernels::active();
  const uint32_t p = f_.p();
  const uint32_t mu = f_.barrett_mu();
  for (size_t i = 0; i < pivots_.size(); ++i) {
    uint32_t c = v[pivots_[i]];
    if (c != 0) k.axpy(v.data(), row(i), cols_, f_.neg(c), p, mu);
  }
  return v;
}

bool ModpMatrix::in_row_span(const std::vector<uint32_t>& v) const {
  auto r = reduce(v);
  for (uint32_t x : r) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace blowup
