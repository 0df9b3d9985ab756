#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"
#include "subspace.hpp"
#include "symplectic.hpp"

namespace surfcoh {

// Linear map H -> wedge^2 H / Q omega, stored as a 2g x (C(2g,2) - 1) matrix:
// row r holds the quotient coordinates of the image of basis vector e_r.
class HomSpaceElement {
 public:
  explicit HomSpaceElement(const SymplecticSpace& space);
  HomSpaceElement(const SymplecticSpace& space, RationalMatrix mat);

  std::size_t genus() const { return genus_; }
  std::size_t quotient_dim() const;  // C(2g, 2) - 1
  const RationalMatrix& matrix() const { return mat_; }

  WedgeTwoModOmega apply(const SymplecticSpace& space, const RationalVector& h) const;
  RationalVector flatten() const;  // row-major

  bool operator==(const HomSpaceElement& o) const {
    return genus_ == o.genus_ && mat_ == o.mat_;
  }

 private:
  std::size_t genus_;
  RationalMatrix mat_;
};

// Contraction of a 3-form against the pairing: on decomposables,
// (x^y^z)(c) = <x,c>(y^z) + <y,c>(z^x) + <z,c>(x^y), reduced mod omega and
// extended linearly.  Alternating in x, y, z.
HomSpaceElement contract(const SymplecticSpace& space, const WedgeThree& xi);

// The copy of H inside the hom space: h -> contract(h ^ omega).
HomSpaceElement embed_h(const SymplecticSpace& space, const RationalVector& h);

// Span of the contractions of all basis 3-forms, together with the embedded
// copy of H it is quotiented by.
struct JohnsonImage {
  Subspace image;       // subspace of the flattened hom space
  Subspace embedded_h;  // span of embed_h over a basis of H
  std::size_t quotient_dim() const { return image.dim() - embedded_h.dim(); }
};

JohnsonImage johnson_image(const SymplecticSpace& space);

// Whether some 3-form's contraction sends target_vector to target_value.
bool tau_hits(const SymplecticSpace& space, const RationalVector& target_vector,
              const WedgeTwoModOmega& target_value);

// A witness 3-form for tau_hits, as integer coordinates over the basis
// 3-forms (denominators cleared); nullopt when the system is unsolvable.
std::optional<std::vector<mpz_class>> tau_witness(const SymplecticSpace& space,
                                                  const RationalVector& target_vector,
                                                  const WedgeTwoModOmega& target_value);

}  // namespace surfcoh
