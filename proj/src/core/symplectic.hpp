#pragma once

#include <cstddef>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace surfcoh {

std::size_t binomial(std::size_t n, std::size_t k);

// The first cohomology of a closed genus-g surface as a symplectic vector
// space over Q: ordered basis a_1..a_g, b_1..b_g (coordinates 0..g-1 and
// g..2g-1) with <a_k, b_k> = 1, <b_k, a_k> = -1, all other basis pairings 0.
// Handle indices k are 1-based; raw coordinate indices are 0-based.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t genus);

  std::size_t genus() const { return genus_; }
  std::size_t dim() const { return 2 * genus_; }

  std::size_t a_coord(std::size_t k) const;  // k in 1..g
  std::size_t b_coord(std::size_t k) const;

  RationalVector unit_a(std::size_t k) const;
  RationalVector unit_b(std::size_t k) const;

  // Gram matrix J of the pairing: pairing(x, y) = x^T J y.
  RationalMatrix pairing_matrix() const;
  Rational pairing(const RationalVector& x, const RationalVector& y) const;

  // T_v : x -> x + <x, v> v.  Symplectic for every v.
  RationalMatrix transvection(const RationalVector& v) const;
  // Transvections along a_k, b_k, a_k + b_k, a_k + a_{k+1}, b_k + b_{k+1};
  // 5g - 2 matrices in that order.
  std::vector<RationalMatrix> transvections() const;

 private:
  std::size_t genus_;
};

// Element of the second exterior power, coordinates over {e_s ^ e_t : s < t}.
struct WedgeTwo {
  std::size_t genus = 0;
  RationalVector coords;  // size C(2g, 2)

  bool is_zero() const { return is_zero_vector(coords); }
  bool operator==(const WedgeTwo& o) const {
    return genus == o.genus && coords == o.coords;
  }
  WedgeTwo operator+(const WedgeTwo& o) const;
  WedgeTwo operator-(const WedgeTwo& o) const;
  WedgeTwo scaled(const Rational& c) const;
};

// Element of the third exterior power, coordinates over {e_s^e_t^e_u : s<t<u}.
struct WedgeThree {
  std::size_t genus = 0;
  RationalVector coords;  // size C(2g, 3)

  bool is_zero() const { return is_zero_vector(coords); }
  bool operator==(const WedgeThree& o) const {
    return genus == o.genus && coords == o.coords;
  }
};

std::size_t pair_rank(std::size_t n, std::size_t s, std::size_t t);
std::size_t triple_rank(std::size_t n, std::size_t s, std::size_t t, std::size_t u);

WedgeTwo wedge2(const SymplecticSpace& space, const RationalVector& x,
                const RationalVector& y);
WedgeThree wedge3(const SymplecticSpace& space, const RationalVector& x,
                  const RationalVector& y, const RationalVector& z);
// x ^ w for a vector x and a 2-form w.
WedgeThree wedge_vec2(const SymplecticSpace& space, const RationalVector& x,
                      const WedgeTwo& w);

// The symplectic class omega = sum_k a_k ^ b_k.
WedgeTwo omega(const SymplecticSpace& space);

// Pushforward of a 2-form along a linear map m on the underlying space.
WedgeTwo map_wedge2(const SymplecticSpace& space, const RationalMatrix& m,
                    const WedgeTwo& w);

// Class in the quotient of the second exterior power by the line through
// omega.  Canonical representative: the coefficients over {a_k ^ b_k} sum to
// zero.  Quotient coordinates drop the a_g ^ b_g coefficient, which the
// zero-sum constraint recovers.
class WedgeTwoModOmega {
 public:
  WedgeTwoModOmega() = default;

  const WedgeTwo& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool operator==(const WedgeTwoModOmega& o) const { return rep_ == o.rep_; }
  bool operator!=(const WedgeTwoModOmega& o) const { return !(*this == o); }

  // C(2g,2) - 1 coordinates.
  RationalVector coords() const;
  static WedgeTwoModOmega from_coords(const SymplecticSpace& space,
                                      const RationalVector& coords);

  friend WedgeTwoModOmega mod_omega(const SymplecticSpace& space, const WedgeTwo& w);

 private:
  WedgeTwo rep_;
};

WedgeTwoModOmega mod_omega(const SymplecticSpace& space, const WedgeTwo& w);

}  // namespace surfcoh
