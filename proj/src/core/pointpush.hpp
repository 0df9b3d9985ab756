#pragma once

#include <cstddef>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"
#include "subspace.hpp"

namespace surfcoh {

// First homology of a genus-g surface with n punctures, over Q.  Basis:
// a_1..a_g, b_1..b_g, c_1..c_{n-1} where c_j is the loop around the j-th
// puncture; the last puncture class is c_n = -(c_1 + ... + c_{n-1}), so the
// relation sum c_i = 0 holds identically.  Dimension 2g + n - 1.
class PuncturedH1 {
 public:
  PuncturedH1(std::size_t genus, std::size_t punctures);

  std::size_t genus() const { return genus_; }
  std::size_t punctures() const { return punctures_; }
  std::size_t dim() const { return 2 * genus_ + punctures_ - 1; }

  std::size_t a_coord(std::size_t k) const;  // k in 1..g
  std::size_t b_coord(std::size_t k) const;
  std::size_t c_coord(std::size_t j) const;  // j in 1..n-1

  RationalVector unit_a(std::size_t k) const;
  RationalVector unit_b(std::size_t k) const;
  // Class of the loop around puncture i, i in 1..n.  For i = n this is the
  // negative sum of the others (zero when n = 1).
  RationalVector c_class(std::size_t i) const;

  // Intersection pairing: symplectic on the a/b part, zero against every
  // puncture class.
  Rational pairing(const RationalVector& x, const RationalVector& y) const;

 private:
  std::size_t genus_;
  std::size_t punctures_;
};

// Generator of the point-pushing action: push the marked point `point`
// around a loop in the homology class `direction`.
struct PushGenerator {
  enum class Dir { A, B, C };
  std::size_t point;  // 1..n
  Dir kind;
  std::size_t index;  // handle index for A/B, puncture index (!= point) for C
};

// Pushes of every point along every a_k, b_k and every other puncture loop.
std::vector<PushGenerator> push_generators(const PuncturedH1& space);

// Homology action of one push: c -> c + <d, c> c_i.  Unipotent; the identity
// when the direction is a puncture class.
RationalMatrix push_action(const PushGenerator& gen, const PuncturedH1& space);

// Contragredient matrix (A^-1)^T, the action on functionals.
RationalMatrix dual_action(const RationalMatrix& a);

// Fixed space of the dual action of all push generators.
Subspace dual_invariants(const PuncturedH1& space);

// Functionals vanishing on every puncture class; what dual_invariants is
// expected to equal.
Subspace c_annihilator(const PuncturedH1& space);

// True iff every push generator acts as the identity on the quotient of the
// dual space by the puncture-class annihilator.
bool quotient_action_trivial(const PuncturedH1& space);

// Direct check that every push matrix fixes every puncture class c_i.
bool punctures_fixed_by_pushes(const PuncturedH1& space);

}  // namespace surfcoh
