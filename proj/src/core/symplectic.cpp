#include "symplectic.hpp"

#include <stdexcept>

namespace surfcoh {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

SymplecticSpace::SymplecticSpace(std::size_t genus) : genus_(genus) {
  if (genus < 2) throw std::invalid_argument("SymplecticSpace: genus must be >= 2");
}

std::size_t SymplecticSpace::a_coord(std::size_t k) const {
  if (k < 1 || k > genus_) throw std::out_of_range("a_coord: handle index");
  return k - 1;
}

std::size_t SymplecticSpace::b_coord(std::size_t k) const {
  if (k < 1 || k > genus_) throw std::out_of_range("b_coord: handle index");
  return genus_ + k - 1;
}

RationalVector SymplecticSpace::unit_a(std::size_t k) const {
  RationalVector v(dim());
  v[a_coord(k)] = Rational(1);
  return v;
}

RationalVector SymplecticSpace::unit_b(std::size_t k) const {
  RationalVector v(dim());
  v[b_coord(k)] = Rational(1);
  return v;
}

RationalMatrix SymplecticSpace::pairing_matrix() const {
  RationalMatrix j(dim(), dim(), RationalMatrix::Storage::Sparse);
  for (std::size_t k = 1; k <= genus_; ++k) {
    j.set(a_coord(k), b_coord(k), Rational(1));
    j.set(b_coord(k), a_coord(k), Rational(-1));
  }
  return j;
}

Rational SymplecticSpace::pairing(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw std::invalid_argument("pairing: dimension mismatch");
  }
  Rational s;
  for (std::size_t k = 0; k < genus_; ++k) {
    s += x[k] * y[genus_ + k] - x[genus_ + k] * y[k];
  }
  return s;
}

RationalMatrix SymplecticSpace::transvection(const RationalVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("transvection: dimension mismatch");
  std::vector<RationalVector> cols;
  cols.reserve(dim());
  for (std::size_t t = 0; t < dim(); ++t) {
    RationalVector e(dim());
    e[t] = Rational(1);
    Rational c = pairing(e, v);
    add_scaled(e, c, v);
    cols.push_back(std::move(e));
  }
  // columns were built; transpose into row-major construction
  std::vector<RationalVector> rows(dim(), RationalVector(dim()));
  for (std::size_t t = 0; t < dim(); ++t) {
    for (std::size_t r = 0; r < dim(); ++r) rows[r][t] = cols[t][r];
  }
  return RationalMatrix::from_rows(rows, dim());
}

std::vector<RationalMatrix> SymplecticSpace::transvections() const {
  std::vector<RationalMatrix> out;
  out.reserve(5 * genus_ - 2);
  for (std::size_t k = 1; k <= genus_; ++k) out.push_back(transvection(unit_a(k)));
  for (std::size_t k = 1; k <= genus_; ++k) out.push_back(transvection(unit_b(k)));
  for (std::size_t k = 1; k <= genus_; ++k) {
    RationalVector v = unit_a(k);
    v[b_coord(k)] = Rational(1);
    out.push_back(transvection(v));
  }
  for (std::size_t k = 1; k + 1 <= genus_; ++k) {
    RationalVector v = unit_a(k);
    v[a_coord(k + 1)] = Rational(1);
    out.push_back(transvection(v));
  }
  for (std::size_t k = 1; k + 1 <= genus_; ++k) {
    RationalVector v = unit_b(k);
    v[b_coord(k + 1)] = Rational(1);
    out.push_back(transvection(v));
  }
  return out;
}

std::size_t pair_rank(std::size_t n, std::size_t s, std::size_t t) {
  if (!(s < t && t < n)) throw std::out_of_range("pair_rank: need s < t < n");
  // pairs in lexicographic order
  return s * n - s * (s + 1) / 2 + (t - s - 1);
}

std::size_t triple_rank(std::size_t n, std::size_t s, std::size_t t, std::size_t u) {
  if (!(s < t && t < u && u < n)) {
    throw std::out_of_range("triple_rank: need s < t < u < n");
  }
  std::size_t r = 0;
  for (std::size_t i = 0; i < s; ++i) r += binomial(n - 1 - i, 2);
  for (std::size_t j = s + 1; j < t; ++j) r += n - 1 - j;
  return r + (u - t - 1);
}

WedgeTwo WedgeTwo::operator+(const WedgeTwo& o) const {
  if (genus != o.genus) throw std::invalid_argument("WedgeTwo: genus mismatch");
  WedgeTwo r{genus, coords};
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

WedgeTwo WedgeTwo::operator-(const WedgeTwo& o) const {
  return *this + o.scaled(Rational(-1));
}

WedgeTwo WedgeTwo::scaled(const Rational& c) const {
  WedgeTwo r{genus, coords};
  for (auto& x : r.coords) x *= c;
  return r;
}

WedgeTwo wedge2(const SymplecticSpace& space, const RationalVector& x,
                const RationalVector& y) {
  std::size_t n = space.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("wedge2: dimension mismatch");
  WedgeTwo w{space.genus(), RationalVector(binomial(n, 2))};
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      Rational c = x[s] * y[t] - x[t] * y[s];
      if (!c.is_zero()) w.coords[pair_rank(n, s, t)] = c;
    }
  }
  return w;
}

WedgeThree wedge3(const SymplecticSpace& space, const RationalVector& x,
                  const RationalVector& y, const RationalVector& z) {
  std::size_t n = space.dim();
  if (x.size() != n || y.size() != n || z.size() != n) {
    throw std::invalid_argument("wedge3: dimension mismatch");
  }
  WedgeThree w{space.genus(), RationalVector(binomial(n, 3))};
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      for (std::size_t u = t + 1; u < n; ++u) {
        // 3x3 determinant of the (s,t,u) rows of [x y z]
        Rational c = x[s] * (y[t] * z[u] - y[u] * z[t]) -
                     y[s] * (x[t] * z[u] - x[u] * z[t]) +
                     z[s] * (x[t] * y[u] - x[u] * y[t]);
        if (!c.is_zero()) w.coords[triple_rank(n, s, t, u)] = c;
      }
    }
  }
  return w;
}

WedgeThree wedge_vec2(const SymplecticSpace& space, const RationalVector& x,
                      const WedgeTwo& w) {
  std::size_t n = space.dim();
  if (x.size() != n || w.genus != space.genus()) {
    throw std::invalid_argument("wedge_vec2: dimension mismatch");
  }
  WedgeThree out{space.genus(), RationalVector(binomial(n, 3))};
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      const Rational& c = w.coords[pair_rank(n, s, t)];
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (x[r].is_zero() || r == s || r == t) continue;
        // sort (r, s, t) and pick up the sign of the permutation
        std::size_t i = r, j = s, k = t;
        int sign = 1;
        if (i > j) { std::swap(i, j); sign = -sign; }
        if (j > k) { std::swap(j, k); sign = -sign; }
        if (i > j) { std::swap(i, j); sign = -sign; }
        Rational term = x[r] * c;
        if (sign < 0) term = -term;
        out.coords[triple_rank(n, i, j, k)] += term;
      }
    }
  }
  return out;
}

WedgeTwo omega(const SymplecticSpace& space) {
  std::size_t n = space.dim();
  WedgeTwo w{space.genus(), RationalVector(binomial(n, 2))};
  for (std::size_t k = 1; k <= space.genus(); ++k) {
    w.coords[pair_rank(n, space.a_coord(k), space.b_coord(k))] = Rational(1);
  }
  return w;
}

WedgeTwo map_wedge2(const SymplecticSpace& space, const RationalMatrix& m,
                    const WedgeTwo& w) {
  std::size_t n = space.dim();
  if (m.rows() != n || m.cols() != n || w.genus != space.genus()) {
    throw std::invalid_argument("map_wedge2: dimension mismatch");
  }
  WedgeTwo out{space.genus(), RationalVector(binomial(n, 2))};
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      const Rational& c = w.coords[pair_rank(n, s, t)];
      if (c.is_zero()) continue;
      WedgeTwo img = wedge2(space, m.col_vector(s), m.col_vector(t));
      for (std::size_t i = 0; i < out.coords.size(); ++i) {
        out.coords[i] += c * img.coords[i];
      }
    }
  }
  return out;
}

RationalVector WedgeTwoModOmega::coords() const {
  if (rep_.genus == 0) return {};
  std::size_t n = 2 * rep_.genus;
  std::size_t drop = pair_rank(n, rep_.genus - 1, n - 1);  // a_g ^ b_g
  RationalVector out;
  out.reserve(rep_.coords.size() - 1);
  for (std::size_t i = 0; i < rep_.coords.size(); ++i) {
    if (i != drop) out.push_back(rep_.coords[i]);
  }
  return out;
}

WedgeTwoModOmega WedgeTwoModOmega::from_coords(const SymplecticSpace& space,
                                               const RationalVector& coords) {
  std::size_t n = space.dim();
  if (coords.size() + 1 != binomial(n, 2)) {
    throw std::invalid_argument("WedgeTwoModOmega::from_coords: wrong length");
  }
  std::size_t drop = pair_rank(n, space.genus() - 1, n - 1);
  WedgeTwo rep{space.genus(), RationalVector(binomial(n, 2))};
  std::size_t j = 0;
  for (std::size_t i = 0; i < rep.coords.size(); ++i) {
    if (i != drop) rep.coords[i] = coords[j++];
  }
  Rational diag_sum;
  for (std::size_t k = 1; k + 1 <= space.genus(); ++k) {
    diag_sum += rep.coords[pair_rank(n, space.a_coord(k), space.b_coord(k))];
  }
  rep.coords[drop] = -diag_sum;
  WedgeTwoModOmega q;
  q.rep_ = std::move(rep);
  return q;
}

WedgeTwoModOmega mod_omega(const SymplecticSpace& space, const WedgeTwo& w) {
  if (w.genus != space.genus()) throw std::invalid_argument("mod_omega: genus mismatch");
  std::size_t n = space.dim();
  Rational diag_sum;
  for (std::size_t k = 1; k <= space.genus(); ++k) {
    diag_sum += w.coords[pair_rank(n, space.a_coord(k), space.b_coord(k))];
  }
  Rational g_inv(1, static_cast<long>(space.genus()));
  WedgeTwoModOmega q;
  q.rep_ = w - omega(space).scaled(diag_sum * g_inv);
  return q;
}

}  // namespace surfcoh
