#include "matrix.hpp"

#include <stdexcept>

namespace surfcoh {

namespace {

const Rational kZero;

RationalMatrix::Storage pick_storage(std::size_t rows, std::size_t cols,
                                     std::size_t nnz) {
  if (rows * cols == 0) return RationalMatrix::Storage::Dense;
  // density < 25%
  return (nnz * 4 < rows * cols) ? RationalMatrix::Storage::Sparse
                                 : RationalMatrix::Storage::Dense;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, Storage storage)
    : rows_(rows), cols_(cols), storage_(storage) {
  if (storage_ == Storage::Dense) {
    dense_.assign(rows_ * cols_, Rational());
  } else {
    sparse_.assign(rows_, {});
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n, pick_storage(n, n, n));
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols, pick_storage(rows, cols, 0));
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows_data,
                                         std::size_t cols) {
  std::size_t nnz = 0;
  for (const auto& row : rows_data) {
    if (row.size() != cols) {
      throw std::invalid_argument("RationalMatrix::from_rows: ragged rows");
    }
    for (const auto& x : row) {
      if (!x.is_zero()) ++nnz;
    }
  }
  RationalMatrix m(rows_data.size(), cols, pick_storage(rows_data.size(), cols, nnz));
  for (std::size_t r = 0; r < rows_data.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!rows_data[r][c].is_zero()) m.set(r, c, rows_data[r][c]);
    }
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows_data) {
  if (rows_data.empty()) {
    throw std::invalid_argument("RationalMatrix::from_rows: need explicit cols for empty");
  }
  return from_rows(rows_data, rows_data.front().size());
}

RationalMatrix RationalMatrix::from_init(
    std::initializer_list<std::initializer_list<long>> data) {
  std::vector<RationalVector> rows;
  for (const auto& row : data) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    rows.push_back(std::move(v));
  }
  return from_rows(rows);
}

std::size_t RationalMatrix::nonzero_count() const {
  std::size_t nnz = 0;
  if (storage_ == Storage::Dense) {
    for (const auto& x : dense_) {
      if (!x.is_zero()) ++nnz;
    }
  } else {
    for (const auto& row : sparse_) nnz += row.size();
  }
  return nnz;
}

void RationalMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("RationalMatrix: index out of range");
  }
}

const Rational& RationalMatrix::entry(std::size_t r, std::size_t c) const {
  check_index(r, c);
  if (storage_ == Storage::Dense) return dense_[r * cols_ + c];
  auto it = sparse_[r].find(c);
  return it == sparse_[r].end() ? kZero : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check_index(r, c);
  if (storage_ == Storage::Dense) {
    dense_[r * cols_ + c] = v;
  } else if (v.is_zero()) {
    sparse_[r].erase(c);
  } else {
    sparse_[r][c] = v;
  }
}

RationalVector RationalMatrix::row_vector(std::size_t r) const {
  RationalVector v(cols_);
  for_each_in_row(r, [&](std::size_t c, const Rational& x) { v[c] = x; });
  return v;
}

RationalVector RationalMatrix::col_vector(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = entry(r, c);
  return v;
}

void RationalMatrix::for_each_in_row(
    std::size_t r, const std::function<void(std::size_t, const Rational&)>& fn) const {
  if (r >= rows_) throw std::out_of_range("RationalMatrix: row out of range");
  if (storage_ == Storage::Dense) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = dense_[r * cols_ + c];
      if (!x.is_zero()) fn(c, x);
    }
  } else {
    for (const auto& [c, x] : sparse_[r]) fn(c, x);
  }
}

RationalMatrix RationalMatrix::with_storage(Storage s) const {
  if (s == storage_) return *this;
  RationalMatrix m(rows_, cols_, s);
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_in_row(r, [&](std::size_t c, const Rational& x) { m.set(r, c, x); });
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  std::vector<RationalVector> rows(cols_, RationalVector(rows_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_in_row(r, [&](std::size_t c, const Rational& x) { rows[c][r] = x; });
  }
  return from_rows(rows, rows_);
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  std::vector<RationalVector> acc(rows_, RationalVector(o.cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_in_row(r, [&](std::size_t k, const Rational& v) {
      o.for_each_in_row(k, [&](std::size_t c, const Rational& w) {
        acc[r][c] += v * w;
      });
    });
  }
  return from_rows(acc, o.cols_);
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_in_row(r, [&](std::size_t c, const Rational& x) { out[r] += x * v[c]; });
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  std::vector<RationalVector> acc(rows_, RationalVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_in_row(r, [&](std::size_t c, const Rational& x) { acc[r][c] += x; });
    o.for_each_in_row(r, [&](std::size_t c, const Rational& x) { acc[r][c] += x; });
  }
  return from_rows(acc, cols_);
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  return *this + o.scaled(Rational(-1));
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  std::vector<RationalVector> acc(rows_, RationalVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_in_row(r, [&](std::size_t col, const Rational& x) { acc[r][col] = c * x; });
  }
  return from_rows(acc, cols_);
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (entry(r, c) != o.entry(r, c)) return false;
    }
  }
  return true;
}

void RationalMatrix::row_swap(std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  if (storage_ == Storage::Dense) {
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap(dense_[r1 * cols_ + c], dense_[r2 * cols_ + c]);
    }
  } else {
    sparse_[r1].swap(sparse_[r2]);
  }
}

void RationalMatrix::row_scale(std::size_t r, const Rational& c) {
  if (storage_ == Storage::Dense) {
    for (std::size_t col = 0; col < cols_; ++col) dense_[r * cols_ + col] *= c;
  } else {
    for (auto& [col, x] : sparse_[r]) x *= c;
  }
}

void RationalMatrix::row_axpy(std::size_t r, const Rational& c, std::size_t src) {
  if (c.is_zero()) return;
  if (storage_ == Storage::Dense) {
    for (std::size_t col = 0; col < cols_; ++col) {
      dense_[r * cols_ + col] += c * dense_[src * cols_ + col];
    }
  } else {
    for (const auto& [col, x] : sparse_[src]) {
      auto it = sparse_[r].find(col);
      if (it == sparse_[r].end()) {
        sparse_[r][col] = c * x;
      } else {
        it->second += c * x;
        if (it->second.is_zero()) sparse_[r].erase(it);
      }
    }
  }
}

// Gauss-Jordan with a fixed pivot rule: columns left to right, pivot on the
// first row at or below the frontier with a nonzero entry.  Column order and
// pivot choice never depend on entry magnitude, so dense and sparse storage
// yield the same matrix.
void RationalMatrix::rref_in_place(std::size_t* out_rank, std::size_t col_limit) {
  std::size_t lead = 0;
  for (std::size_t col = 0; col < col_limit && lead < rows_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t r = lead; r < rows_; ++r) {
      if (!entry(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) continue;
    row_swap(lead, pivot);
    Rational inv = Rational(1) / entry(lead, col);
    row_scale(lead, inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      const Rational& x = entry(r, col);
      if (!x.is_zero()) row_axpy(r, -x, lead);
    }
    ++lead;
  }
  *out_rank = lead;
}

std::pair<RationalMatrix, std::size_t> RationalMatrix::rref() const {
  RationalMatrix m = *this;
  std::size_t rank = 0;
  m.rref_in_place(&rank, cols_);
  return {std::move(m), rank};
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  RationalMatrix m = with_storage(Storage::Dense);
  Rational det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t r = col; r < rows_; ++r) {
      if (!m.entry(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) return Rational(0);
    if (pivot != col) {
      m.row_swap(col, pivot);
      det = -det;
    }
    det *= m.entry(col, col);
    Rational inv = Rational(1) / m.entry(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      const Rational& x = m.entry(r, col);
      if (!x.is_zero()) m.row_axpy(r, -(x * inv), col);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  RationalMatrix aug(rows_, 2 * cols_, Storage::Dense);
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_in_row(r, [&](std::size_t c, const Rational& x) { aug.set(r, c, x); });
    aug.set(r, cols_ + r, Rational(1));
  }
  std::size_t rank = 0;
  aug.rref_in_place(&rank, cols_);
  if (rank != rows_) throw std::domain_error("inverse: singular matrix");
  std::vector<RationalVector> rows(rows_, RationalVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = aug.entry(r, cols_ + c);
  }
  return from_rows(rows, cols_);
}

RationalMatrix RationalMatrix::stack_vertical(const RationalMatrix& top,
                                              const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("stack_vertical: column mismatch");
  }
  std::vector<RationalVector> rows;
  rows.reserve(top.rows() + bottom.rows());
  for (std::size_t r = 0; r < top.rows(); ++r) rows.push_back(top.row_vector(r));
  for (std::size_t r = 0; r < bottom.rows(); ++r) rows.push_back(bottom.row_vector(r));
  return from_rows(rows, top.cols());
}

std::string RationalMatrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += vector_str(row_vector(r));
    s += "\n";
  }
  return s;
}

}  // namespace surfcoh
