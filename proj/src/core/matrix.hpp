#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace surfcoh {

// Immutable-by-convention exact matrix over the rationals.  Entries live in
// either a dense row-major array or per-row sparse maps; the storage is an
// internal detail chosen by a density heuristic (sparse below 25%) and never
// affects computed values.  All elimination uses a fixed pivot order, so the
// two storages produce identical results.
class RationalMatrix {
 public:
  enum class Storage { Dense, Sparse };

  RationalMatrix() : rows_(0), cols_(0), storage_(Storage::Dense) {}
  RationalMatrix(std::size_t rows, std::size_t cols, Storage storage = Storage::Dense);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols);
  // Picks storage by density.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows_data,
                                  std::size_t cols);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows_data);
  static RationalMatrix from_init(
      std::initializer_list<std::initializer_list<long>> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Storage storage() const { return storage_; }
  std::size_t nonzero_count() const;

  const Rational& entry(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);

  RationalVector row_vector(std::size_t r) const;
  RationalVector col_vector(std::size_t c) const;

  // Calls fn(col, value) for each stored nonzero of row r, in column order.
  void for_each_in_row(std::size_t r,
                       const std::function<void(std::size_t, const Rational&)>& fn) const;

  RationalMatrix with_storage(Storage s) const;
  RationalMatrix transpose() const;

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& c) const;

  bool operator==(const RationalMatrix& o) const;
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }
  bool is_zero() const { return nonzero_count() == 0; }

  // Reduced row echelon form and rank.  The RREF of a matrix is unique, so
  // this is a canonical form.
  std::pair<RationalMatrix, std::size_t> rref() const;
  std::size_t rank() const { return rref().second; }

  Rational determinant() const;
  RationalMatrix inverse() const;  // throws std::domain_error when singular

  static RationalMatrix stack_vertical(const RationalMatrix& top,
                                       const RationalMatrix& bottom);

  std::string str() const;

 private:
  void rref_in_place(std::size_t* out_rank, std::size_t col_limit);
  void row_swap(std::size_t r1, std::size_t r2);
  void row_scale(std::size_t r, const Rational& c);
  // row r += c * row src
  void row_axpy(std::size_t r, const Rational& c, std::size_t src);
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_;
  std::size_t cols_;
  Storage storage_;
  std::vector<Rational> dense_;                          // used iff Dense
  std::vector<std::map<std::size_t, Rational>> sparse_;  // used iff Sparse
};

}  // namespace surfcoh
