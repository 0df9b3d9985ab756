#include "confspace.hpp"

#include <stdexcept>

namespace surfcoh {

ConfSpaceModel::ConfSpaceModel(std::size_t genus, std::size_t points)
    : space_(genus), points_(points) {
  if (points < 1) throw std::invalid_argument("ConfSpaceModel: need at least one point");
}

std::size_t ConfSpaceModel::block_offset(std::size_t i) const {
  if (i < 1 || i > points_) throw std::out_of_range("ConfSpaceModel: point index");
  return (i - 1) * block_dim();
}

ConfClass1::ConfClass1(const ConfSpaceModel& model, RationalVector coords)
    : genus_(model.genus()), points_(model.points()), coords_(std::move(coords)) {
  if (coords_.size() != model.dim()) {
    throw std::invalid_argument("ConfClass1: wrong coordinate length");
  }
}

ConfClass1 ConfClass1::zero(const ConfSpaceModel& model) {
  return ConfClass1(model, RationalVector(model.dim()));
}

ConfClass1 ConfClass1::in_block(const ConfSpaceModel& model, std::size_t i,
                                const RationalVector& v) {
  if (v.size() != model.block_dim()) {
    throw std::invalid_argument("ConfClass1::in_block: wrong block length");
  }
  RationalVector coords(model.dim());
  std::size_t off = model.block_offset(i);
  for (std::size_t s = 0; s < v.size(); ++s) coords[off + s] = v[s];
  return ConfClass1(model, std::move(coords));
}

RationalVector ConfClass1::block(std::size_t i) const {
  if (i < 1 || i > points_) throw std::out_of_range("ConfClass1: point index");
  std::size_t d = 2 * genus_;
  RationalVector v(d);
  for (std::size_t s = 0; s < d; ++s) v[s] = coords_[(i - 1) * d + s];
  return v;
}

H2Presentation::H2Presentation(const ConfSpaceModel& model, RelationSign sign)
    : model_(model), sign_(sign) {
  std::size_t n = model_.points();
  std::vector<RationalVector> rows;
  rows.reserve(binomial(n, 2));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) rows.push_back(relation(i, j));
  }
  relation_matrix_ = rows.empty()
                         ? RationalMatrix::zero(0, ambient_dim())
                         : RationalMatrix::from_rows(rows, ambient_dim());
  relation_space_ = Subspace::from_spanning_rows(relation_matrix_);
}

std::size_t H2Presentation::ambient_dim() const {
  std::size_t n = model_.points();
  std::size_t d = model_.block_dim();
  return n + binomial(n, 2) * d * d;
}

std::size_t H2Presentation::relation_count() const {
  return binomial(model_.points(), 2);
}

std::size_t H2Presentation::p_index(std::size_t i) const {
  if (i < 1 || i > model_.points()) throw std::out_of_range("p_index: point index");
  return i - 1;
}

std::size_t H2Presentation::tensor_index(std::size_t i, std::size_t j, std::size_t s,
                                         std::size_t t) const {
  std::size_t n = model_.points();
  std::size_t d = model_.block_dim();
  if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("tensor_index: need i < j");
  if (s >= d || t >= d) throw std::out_of_range("tensor_index: factor index");
  return n + pair_rank(n, i - 1, j - 1) * d * d + s * d + t;
}

RationalVector H2Presentation::relation(std::size_t i, std::size_t j) const {
  const SymplecticSpace& sp = model_.space();
  RationalVector r(ambient_dim());
  r[p_index(i)] = Rational(1);
  r[p_index(j)] = Rational(1);
  Rational m_coeff = sign_ == RelationSign::Minus ? Rational(-1) : Rational(1);
  for (std::size_t k = 1; k <= model_.genus(); ++k) {
    // M_{i,j} = sum_k a_k (x) b_k - b_k (x) a_k
    r[tensor_index(i, j, sp.a_coord(k), sp.b_coord(k))] = m_coeff;
    r[tensor_index(i, j, sp.b_coord(k), sp.a_coord(k))] = -m_coeff;
  }
  return r;
}

RationalVector cup_ambient(const ConfClass1& x, const ConfClass1& y,
                           const H2Presentation& pres) {
  if (!x.same_model(y) || x.genus() != pres.model().genus() ||
      x.points() != pres.model().points()) {
    throw std::invalid_argument("cup: model mismatch");
  }
  const ConfSpaceModel& model = pres.model();
  const SymplecticSpace& sp = model.space();
  std::size_t n = model.points();
  std::size_t d = model.block_dim();
  RationalVector out(pres.ambient_dim());
  std::vector<RationalVector> xb, yb;
  xb.reserve(n);
  yb.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    xb.push_back(x.block(i));
    yb.push_back(y.block(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    out[pres.p_index(i)] = sp.pairing(xb[i - 1], yb[i - 1]);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = 0; t < d; ++t) {
          Rational c = xb[i - 1][s] * yb[j - 1][t] - yb[i - 1][s] * xb[j - 1][t];
          if (!c.is_zero()) out[pres.tensor_index(i, j, s, t)] = c;
        }
      }
    }
  }
  return out;
}

H2Class cup(const ConfClass1& x, const ConfClass1& y, const H2Presentation& pres) {
  return H2Class(pres, cup_ambient(x, y, pres));
}

std::size_t image_rank(const H2Presentation& pres) {
  return pres.ambient_dim() - pres.relation_rank();
}

std::size_t image_rank(const ConfSpaceModel& model) {
  return image_rank(H2Presentation(model));
}

bool is_crossing(const ConfClass1& x) {
  std::size_t nonzero_blocks = 0;
  for (std::size_t i = 1; i <= x.points(); ++i) {
    if (!is_zero_vector(x.block(i))) ++nonzero_blocks;
  }
  return nonzero_blocks > 1;
}

Subspace annihilator(const ConfClass1& x, const H2Presentation& pres) {
  const ConfSpaceModel& model = pres.model();
  std::size_t dim = model.dim();
  std::vector<RationalVector> cols;
  cols.reserve(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    RationalVector e(dim);
    e[t] = Rational(1);
    cols.push_back(pres.reduce(cup_ambient(x, ConfClass1(model, e), pres)));
  }
  std::vector<RationalVector> rows(pres.ambient_dim(), RationalVector(dim));
  for (std::size_t t = 0; t < dim; ++t) {
    for (std::size_t r = 0; r < pres.ambient_dim(); ++r) rows[r][t] = cols[t][r];
  }
  return kernel(RationalMatrix::from_rows(rows, dim));
}

RationalMatrix block_transposition(const ConfSpaceModel& model, std::size_t i) {
  if (i < 1 || i + 1 > model.points()) {
    throw std::out_of_range("block_transposition: index");
  }
  std::size_t d = model.block_dim();
  RationalMatrix p(model.dim(), model.dim(), RationalMatrix::Storage::Sparse);
  for (std::size_t blk = 1; blk <= model.points(); ++blk) {
    std::size_t target = blk == i ? i + 1 : (blk == i + 1 ? i : blk);
    for (std::size_t s = 0; s < d; ++s) {
      p.set(model.block_offset(target) + s, model.block_offset(blk) + s, Rational(1));
    }
  }
  return p;
}

Subspace sym_invariants(const ConfSpaceModel& model) {
  if (model.points() < 2) throw std::invalid_argument("sym_invariants: need n >= 2");
  std::vector<RationalMatrix> gens;
  gens.reserve(model.points() - 1);
  for (std::size_t i = 1; i + 1 <= model.points(); ++i) {
    gens.push_back(block_transposition(model, i));
  }
  return fixed_subspace(gens, model.dim());
}

Subspace diagonal_subspace(const ConfSpaceModel& model) {
  std::size_t d = model.block_dim();
  std::vector<RationalVector> rows;
  rows.reserve(d);
  for (std::size_t s = 0; s < d; ++s) {
    RationalVector v(model.dim());
    for (std::size_t i = 1; i <= model.points(); ++i) {
      v[model.block_offset(i) + s] = Rational(1);
    }
    rows.push_back(std::move(v));
  }
  return Subspace::from_vectors(rows, model.dim());
}

RationalMatrix diagonal_transvection(const ConfSpaceModel& model, std::size_t index) {
  std::vector<RationalMatrix> list = model.space().transvections();
  if (index >= list.size()) throw std::out_of_range("diagonal_transvection: index");
  const RationalMatrix& t = list[index];
  std::size_t d = model.block_dim();
  RationalMatrix out(model.dim(), model.dim(), RationalMatrix::Storage::Sparse);
  for (std::size_t i = 1; i <= model.points(); ++i) {
    std::size_t off = model.block_offset(i);
    for (std::size_t r = 0; r < d; ++r) {
      t.for_each_in_row(r, [&](std::size_t c, const Rational& v) {
        out.set(off + r, off + c, v);
      });
    }
  }
  return out;
}

std::optional<std::size_t> find_moving_transvection(const Subspace& s,
                                                    const ConfSpaceModel& model) {
  if (s.dim() == 0) throw std::invalid_argument("find_moving_transvection: zero subspace");
  if (s.ambient_dim() != model.dim()) {
    throw std::invalid_argument("find_moving_transvection: ambient mismatch");
  }
  std::size_t count = model.space().transvections().size();
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (!is_invariant(s, diagonal_transvection(model, idx))) return idx;
  }
  return std::nullopt;
}

bool is_isotropic(const Subspace& s, const H2Presentation& pres) {
  if (s.ambient_dim() != pres.model().dim()) {
    throw std::invalid_argument("is_isotropic: ambient mismatch");
  }
  const ConfSpaceModel& model = pres.model();
  for (std::size_t r1 = 0; r1 < s.dim(); ++r1) {
    ConfClass1 u(model, s.basis().row_vector(r1));
    for (std::size_t r2 = r1 + 1; r2 < s.dim(); ++r2) {
      ConfClass1 v(model, s.basis().row_vector(r2));
      if (!cup(u, v, pres).is_zero()) return false;
    }
  }
  return true;
}

std::size_t cover_genus(std::size_t g, std::size_t n) {
  if (g < 2) throw std::invalid_argument("cover_genus: genus must be >= 2");
  if (n < 1) throw std::invalid_argument("cover_genus: sheets must be >= 1");
  // Euler characteristic is multiplicative under covers:
  // 2 - 2r = n (2 - 2g)  =>  r = n (g - 1) + 1.
  return n * (g - 1) + 1;
}

}  // namespace surfcoh
