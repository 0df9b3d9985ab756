#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace surfcoh {

// Linear subspace of Q^d in canonical form: the stored basis is the reduced
// row echelon form of any spanning set, so two Subspace values are equal iff
// they are the same subspace.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace from_spanning_rows(const RationalMatrix& spanning);
  static Subspace from_vectors(const std::vector<RationalVector>& vectors,
                               std::size_t ambient_dim);
  static Subspace line(const RationalVector& v);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  // RREF matrix whose rows are the canonical basis vectors.
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;
  // Remainder of v after eliminating this basis' pivot coordinates; zero iff
  // v lies in the subspace.
  RationalVector reduce(RationalVector v) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersection(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Null space {v : m v = 0}, canonical.
Subspace kernel(const RationalMatrix& m);

// Column space of m, canonical.
Subspace image(const RationalMatrix& m);

// Simultaneous fixed space of a family of square operators: the intersection
// of ker(A - I) over all A.  Empty family fixes everything.
Subspace fixed_subspace(std::span<const RationalMatrix> ops, std::size_t ambient_dim);

// True iff a maps s into itself.
bool is_invariant(const Subspace& s, const RationalMatrix& a);

}  // namespace surfcoh
