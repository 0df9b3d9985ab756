#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"
#include "subspace.hpp"
#include "symplectic.hpp"

namespace surfcoh {

// Ordered configurations of n points on a closed genus-g surface, as far as
// degree-one cohomology sees them: one copy of the surface's H^1 per point.
class ConfSpaceModel {
 public:
  ConfSpaceModel(std::size_t genus, std::size_t points);

  std::size_t genus() const { return space_.genus(); }
  std::size_t points() const { return points_; }
  const SymplecticSpace& space() const { return space_; }

  std::size_t block_dim() const { return space_.dim(); }
  std::size_t dim() const { return block_dim() * points_; }  // 2 g n
  std::size_t block_offset(std::size_t i) const;             // i in 1..n

  bool operator==(const ConfSpaceModel& o) const {
    return genus() == o.genus() && points_ == o.points_;
  }

 private:
  SymplecticSpace space_;
  std::size_t points_;
};

// Degree-one class on the configuration space: n blocks of 2g rationals.
class ConfClass1 {
 public:
  ConfClass1(const ConfSpaceModel& model, RationalVector coords);
  static ConfClass1 zero(const ConfSpaceModel& model);
  // Class supported in a single block.
  static ConfClass1 in_block(const ConfSpaceModel& model, std::size_t i,
                             const RationalVector& v);

  std::size_t genus() const { return genus_; }
  std::size_t points() const { return points_; }
  const RationalVector& coords() const { return coords_; }
  RationalVector block(std::size_t i) const;  // i in 1..n

  bool same_model(const ConfClass1& o) const {
    return genus_ == o.genus_ && points_ == o.points_;
  }

 private:
  std::size_t genus_;
  std::size_t points_;
  RationalVector coords_;
};

// Sign convention for the tensor part of the relations: the relation is
// p_i + p_j - M_{i,j} under Minus and p_i + p_j + M_{i,j} under Plus.
enum class RelationSign { Minus, Plus };

// Presentation of the degree-two cup-product image.  Ambient basis: one
// coordinate per point class p_i (i = 1..n) followed by one (2g)x(2g) block
// of tensor coordinates per unordered pair i < j.  The relation subspace is
// spanned by the R_{i,j}; classes are reduced against its canonical basis.
class H2Presentation {
 public:
  explicit H2Presentation(const ConfSpaceModel& model,
                          RelationSign sign = RelationSign::Minus);

  const ConfSpaceModel& model() const { return model_; }
  RelationSign sign() const { return sign_; }

  std::size_t ambient_dim() const;
  std::size_t relation_count() const;  // C(n, 2)
  std::size_t relation_rank() const { return relation_space_.dim(); }
  bool relations_independent() const { return relation_rank() == relation_count(); }

  std::size_t p_index(std::size_t i) const;  // i in 1..n
  std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t s,
                           std::size_t t) const;  // i < j; s, t 0-based

  // R_{i,j} as an ambient vector.
  RationalVector relation(std::size_t i, std::size_t j) const;
  const RationalMatrix& relation_matrix() const { return relation_matrix_; }
  const Subspace& relation_space() const { return relation_space_; }

  // Canonical representative modulo the relation subspace.
  RationalVector reduce(const RationalVector& ambient) const {
    return relation_space_.reduce(ambient);
  }

 private:
  ConfSpaceModel model_;
  RelationSign sign_;
  RationalMatrix relation_matrix_;
  Subspace relation_space_;
};

// Degree-two class, stored as its canonical representative.
class H2Class {
 public:
  H2Class(const H2Presentation& pres, const RationalVector& ambient)
      : canonical_(pres.reduce(ambient)) {}

  const RationalVector& canonical() const { return canonical_; }
  bool is_zero() const { return is_zero_vector(canonical_); }
  bool operator==(const H2Class& o) const { return canonical_ == o.canonical_; }
  bool operator!=(const H2Class& o) const { return !(*this == o); }

 private:
  RationalVector canonical_;
};

// Cup product before reduction: pairing terms on the point classes plus
// x^i (x) y^j - y^i (x) x^j in each i < j tensor block.
RationalVector cup_ambient(const ConfClass1& x, const ConfClass1& y,
                           const H2Presentation& pres);
H2Class cup(const ConfClass1& x, const ConfClass1& y, const H2Presentation& pres);

// Rank of the cup-product image: ambient dimension minus relation rank,
// computed from the relation matrix.
std::size_t image_rank(const H2Presentation& pres);
std::size_t image_rank(const ConfSpaceModel& model);

// At least two nonzero blocks.
bool is_crossing(const ConfClass1& x);

// {y : cup(x, y) = 0}, as a subspace of Q^{2gn}.
Subspace annihilator(const ConfClass1& x, const H2Presentation& pres);

// Fixed space of the block-permutation action of the symmetric group,
// computed from adjacent transpositions.  Requires n >= 2.
Subspace sym_invariants(const ConfSpaceModel& model);
// The diagonal {(v, v, ..., v)}; what sym_invariants is expected to equal.
Subspace diagonal_subspace(const ConfSpaceModel& model);
// Block permutation matrix swapping blocks i and i+1.
RationalMatrix block_transposition(const ConfSpaceModel& model, std::size_t i);

// Applies each standard transvection diagonally (the same matrix on every
// block) and returns the index of the first one that moves s, if any.
std::optional<std::size_t> find_moving_transvection(const Subspace& s,
                                                    const ConfSpaceModel& model);
// The diagonal action matrix for the given transvection index.
RationalMatrix diagonal_transvection(const ConfSpaceModel& model, std::size_t index);

// True iff the cup product vanishes on all pairs from s.
bool is_isotropic(const Subspace& s, const H2Presentation& pres);

// Genus of a connected degree-n cover of a genus-g surface.
std::size_t cover_genus(std::size_t g, std::size_t n);

}  // namespace surfcoh
