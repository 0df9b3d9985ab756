#include "subspace.hpp"

#include <stdexcept>

namespace surfcoh {

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = RationalMatrix::zero(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return from_spanning_rows(RationalMatrix::identity(ambient_dim));
}

Subspace Subspace::from_spanning_rows(const RationalMatrix& spanning) {
  auto [rr, rank] = spanning.rref();
  Subspace s;
  s.ambient_ = spanning.cols();
  std::vector<RationalVector> rows;
  rows.reserve(rank);
  for (std::size_t r = 0; r < rank; ++r) rows.push_back(rr.row_vector(r));
  s.basis_ = RationalMatrix::from_rows(rows, spanning.cols());
  s.pivots_.reserve(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t p = 0;
    while (p < s.ambient_ && s.basis_.entry(r, p).is_zero()) ++p;
    s.pivots_.push_back(p);
  }
  return s;
}

Subspace Subspace::from_vectors(const std::vector<RationalVector>& vectors,
                                std::size_t ambient_dim) {
  if (vectors.empty()) return zero(ambient_dim);
  return from_spanning_rows(RationalMatrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::line(const RationalVector& v) {
  return from_vectors({v}, v.size());
}

RationalVector Subspace::reduce(RationalVector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rational& coeff = v[pivots_[r]];
    if (coeff.is_zero()) continue;
    Rational c = -coeff;
    basis_.for_each_in_row(r, [&](std::size_t col, const Rational& x) {
      v[col] += c * x;
    });
  }
  return v;
}

bool Subspace::contains(const RationalVector& v) const {
  return is_zero_vector(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
    if (!contains(other.basis_.row_vector(r))) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("sum: ambient mismatch");
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::from_spanning_rows(
      RationalMatrix::stack_vertical(a.basis_, b.basis_));
}

// Zassenhaus: row reduce [A | A; B | 0]; rows whose left half vanished have
// right halves spanning the intersection.
Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("intersection: ambient mismatch");
  std::size_t d = a.ambient_;
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(d);
  std::vector<RationalVector> rows;
  rows.reserve(a.dim() + b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    RationalVector v(2 * d);
    a.basis().for_each_in_row(r, [&](std::size_t c, const Rational& x) {
      v[c] = x;
      v[d + c] = x;
    });
    rows.push_back(std::move(v));
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    RationalVector v(2 * d);
    b.basis().for_each_in_row(r, [&](std::size_t c, const Rational& x) { v[c] = x; });
    rows.push_back(std::move(v));
  }
  auto [rr, rank] = RationalMatrix::from_rows(rows, 2 * d).rref();
  std::vector<RationalVector> inter;
  for (std::size_t r = 0; r < rank; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < d && left_zero; ++c) {
      if (!rr.entry(r, c).is_zero()) left_zero = false;
    }
    if (!left_zero) continue;
    RationalVector v(d);
    for (std::size_t c = 0; c < d; ++c) v[c] = rr.entry(r, d + c);
    inter.push_back(std::move(v));
  }
  return Subspace::from_vectors(inter, d);
}

Subspace kernel(const RationalMatrix& m) {
  auto [rr, rank] = m.rref();
  std::size_t d = m.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(d, false);
  pivot_col.reserve(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t p = 0;
    while (p < d && rr.entry(r, p).is_zero()) ++p;
    pivot_col.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(d);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rr.entry(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::from_vectors(basis, d);
}

Subspace image(const RationalMatrix& m) {
  return Subspace::from_spanning_rows(m.transpose());
}

Subspace fixed_subspace(std::span<const RationalMatrix> ops, std::size_t ambient_dim) {
  std::vector<RationalVector> rows;
  for (const auto& a : ops) {
    if (a.rows() != ambient_dim || a.cols() != ambient_dim) {
      throw std::invalid_argument("fixed_subspace: operator dimension mismatch");
    }
    RationalMatrix d = a - RationalMatrix::identity(ambient_dim);
    for (std::size_t r = 0; r < d.rows(); ++r) rows.push_back(d.row_vector(r));
  }
  if (rows.empty()) return Subspace::full(ambient_dim);
  return kernel(RationalMatrix::from_rows(rows, ambient_dim));
}

bool is_invariant(const Subspace& s, const RationalMatrix& a) {
  if (a.rows() != s.ambient_dim() || a.cols() != s.ambient_dim()) {
    throw std::invalid_argument("is_invariant: dimension mismatch");
  }
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (!s.contains(a * s.basis().row_vector(r))) return false;
  }
  return true;
}

}  // namespace surfcoh
