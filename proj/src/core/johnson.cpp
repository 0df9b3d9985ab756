#include "johnson.hpp"

#include <stdexcept>

namespace surfcoh {

namespace {

// Adds coeff * (e_s ^ e_t) to w, folding the orientation when s > t.
void add_pair(WedgeTwo& w, std::size_t n, std::size_t s, std::size_t t,
              const Rational& coeff) {
  if (s == t) return;
  if (s < t) {
    w.coords[pair_rank(n, s, t)] += coeff;
  } else {
    w.coords[pair_rank(n, t, s)] -= coeff;
  }
}

}  // namespace

HomSpaceElement::HomSpaceElement(const SymplecticSpace& space)
    : genus_(space.genus()),
      mat_(RationalMatrix::zero(space.dim(), binomial(space.dim(), 2) - 1)) {}

HomSpaceElement::HomSpaceElement(const SymplecticSpace& space, RationalMatrix mat)
    : genus_(space.genus()), mat_(std::move(mat)) {
  if (mat_.rows() != space.dim() || mat_.cols() != binomial(space.dim(), 2) - 1) {
    throw std::invalid_argument("HomSpaceElement: wrong matrix shape");
  }
}

std::size_t HomSpaceElement::quotient_dim() const {
  return binomial(2 * genus_, 2) - 1;
}

WedgeTwoModOmega HomSpaceElement::apply(const SymplecticSpace& space,
                                        const RationalVector& h) const {
  if (space.genus() != genus_ || h.size() != space.dim()) {
    throw std::invalid_argument("HomSpaceElement::apply: dimension mismatch");
  }
  RationalVector coords(quotient_dim());
  for (std::size_t r = 0; r < space.dim(); ++r) {
    if (h[r].is_zero()) continue;
    mat_.for_each_in_row(r, [&](std::size_t c, const Rational& x) {
      coords[c] += h[r] * x;
    });
  }
  return WedgeTwoModOmega::from_coords(space, coords);
}

RationalVector HomSpaceElement::flatten() const {
  RationalVector v(mat_.rows() * mat_.cols());
  for (std::size_t r = 0; r < mat_.rows(); ++r) {
    mat_.for_each_in_row(r, [&](std::size_t c, const Rational& x) {
      v[r * mat_.cols() + c] = x;
    });
  }
  return v;
}

HomSpaceElement contract(const SymplecticSpace& space, const WedgeThree& xi) {
  if (xi.genus != space.genus()) throw std::invalid_argument("contract: genus mismatch");
  std::size_t n = space.dim();
  std::vector<RationalVector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    RationalVector e(n);
    e[r] = Rational(1);
    WedgeTwo value{space.genus(), RationalVector(binomial(n, 2))};
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = s + 1; t < n; ++t) {
        for (std::size_t u = t + 1; u < n; ++u) {
          const Rational& coeff = xi.coords[triple_rank(n, s, t, u)];
          if (coeff.is_zero()) continue;
          RationalVector es(n), et(n), eu(n);
          es[s] = Rational(1);
          et[t] = Rational(1);
          eu[u] = Rational(1);
          add_pair(value, n, t, u, coeff * space.pairing(es, e));
          add_pair(value, n, u, s, coeff * space.pairing(et, e));
          add_pair(value, n, s, t, coeff * space.pairing(eu, e));
        }
      }
    }
    rows.push_back(mod_omega(space, value).coords());
  }
  return HomSpaceElement(space, RationalMatrix::from_rows(rows, binomial(n, 2) - 1));
}

HomSpaceElement embed_h(const SymplecticSpace& space, const RationalVector& h) {
  return contract(space, wedge_vec2(space, h, omega(space)));
}

JohnsonImage johnson_image(const SymplecticSpace& space) {
  std::size_t n = space.dim();
  std::vector<RationalVector> image_rows;
  image_rows.reserve(binomial(n, 3));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      for (std::size_t u = t + 1; u < n; ++u) {
        WedgeThree basis{space.genus(), RationalVector(binomial(n, 3))};
        basis.coords[triple_rank(n, s, t, u)] = Rational(1);
        image_rows.push_back(contract(space, basis).flatten());
      }
    }
  }
  std::vector<RationalVector> embed_rows;
  embed_rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    RationalVector e(n);
    e[r] = Rational(1);
    embed_rows.push_back(embed_h(space, e).flatten());
  }
  std::size_t flat_dim = n * (binomial(n, 2) - 1);
  return JohnsonImage{Subspace::from_vectors(image_rows, flat_dim),
                      Subspace::from_vectors(embed_rows, flat_dim)};
}

namespace {

// Columns: quotient coordinates of contract(basis 3-form)(target_vector).
RationalMatrix evaluation_matrix(const SymplecticSpace& space,
                                 const RationalVector& target_vector) {
  std::size_t n = space.dim();
  std::size_t q = binomial(n, 2) - 1;
  std::size_t triples = binomial(n, 3);
  std::vector<RationalVector> rows(q, RationalVector(triples));
  std::size_t col = 0;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      for (std::size_t u = t + 1; u < n; ++u) {
        WedgeThree basis{space.genus(), RationalVector(binomial(n, 3))};
        basis.coords[triple_rank(n, s, t, u)] = Rational(1);
        RationalVector val =
            contract(space, basis).apply(space, target_vector).coords();
        for (std::size_t r = 0; r < q; ++r) rows[r][col] = val[r];
        ++col;
      }
    }
  }
  return RationalMatrix::from_rows(rows, triples);
}

std::optional<RationalVector> solve_linear(const RationalMatrix& a,
                                           const RationalVector& b) {
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_linear: shape mismatch");
  std::vector<RationalVector> rows(m, RationalVector(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    a.for_each_in_row(r, [&](std::size_t c, const Rational& x) { rows[r][c] = x; });
    rows[r][n] = b[r];
  }
  auto [rr, rank] = RationalMatrix::from_rows(rows, n + 1).rref();
  RationalVector x(n);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t p = 0;
    while (p <= n && rr.entry(r, p).is_zero()) ++p;
    if (p == n) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    x[p] = rr.entry(r, n);            // free variables stay zero
  }
  return x;
}

}  // namespace

bool tau_hits(const SymplecticSpace& space, const RationalVector& target_vector,
              const WedgeTwoModOmega& target_value) {
  return solve_linear(evaluation_matrix(space, target_vector), target_value.coords())
      .has_value();
}

std::optional<std::vector<mpz_class>> tau_witness(
    const SymplecticSpace& space, const RationalVector& target_vector,
    const WedgeTwoModOmega& target_value) {
  auto sol = solve_linear(evaluation_matrix(space, target_vector),
                          target_value.coords());
  if (!sol) return std::nullopt;
  mpz_class lcm_den(1);
  for (const Rational& x : *sol) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
    lcm_den = l;
  }
  std::vector<mpz_class> out;
  out.reserve(sol->size());
  for (const Rational& x : *sol) {
    out.push_back(x.num() * (lcm_den / x.den()));
  }
  return out;
}

}  // namespace surfcoh
