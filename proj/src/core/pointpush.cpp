#include "pointpush.hpp"

#include <stdexcept>

namespace surfcoh {

PuncturedH1::PuncturedH1(std::size_t genus, std::size_t punctures)
    : genus_(genus), punctures_(punctures) {
  if (genus < 2) throw std::invalid_argument("PuncturedH1: genus must be >= 2");
  if (punctures < 1) throw std::invalid_argument("PuncturedH1: need a puncture");
}

std::size_t PuncturedH1::a_coord(std::size_t k) const {
  if (k < 1 || k > genus_) throw std::out_of_range("a_coord: handle index");
  return k - 1;
}

std::size_t PuncturedH1::b_coord(std::size_t k) const {
  if (k < 1 || k > genus_) throw std::out_of_range("b_coord: handle index");
  return genus_ + k - 1;
}

std::size_t PuncturedH1::c_coord(std::size_t j) const {
  if (j < 1 || j >= punctures_) throw std::out_of_range("c_coord: puncture index");
  return 2 * genus_ + j - 1;
}

RationalVector PuncturedH1::unit_a(std::size_t k) const {
  RationalVector v(dim());
  v[a_coord(k)] = Rational(1);
  return v;
}

RationalVector PuncturedH1::unit_b(std::size_t k) const {
  RationalVector v(dim());
  v[b_coord(k)] = Rational(1);
  return v;
}

RationalVector PuncturedH1::c_class(std::size_t i) const {
  if (i < 1 || i > punctures_) throw std::out_of_range("c_class: puncture index");
  RationalVector v(dim());
  if (i < punctures_) {
    v[c_coord(i)] = Rational(1);
  } else {
    for (std::size_t j = 1; j < punctures_; ++j) v[c_coord(j)] = Rational(-1);
  }
  return v;
}

Rational PuncturedH1::pairing(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw std::invalid_argument("PuncturedH1::pairing: dimension mismatch");
  }
  Rational s;
  for (std::size_t k = 0; k < genus_; ++k) {
    s += x[k] * y[genus_ + k] - x[genus_ + k] * y[k];
  }
  return s;
}

std::vector<PushGenerator> push_generators(const PuncturedH1& space) {
  std::vector<PushGenerator> gens;
  for (std::size_t i = 1; i <= space.punctures(); ++i) {
    for (std::size_t k = 1; k <= space.genus(); ++k) {
      gens.push_back({i, PushGenerator::Dir::A, k});
      gens.push_back({i, PushGenerator::Dir::B, k});
    }
    for (std::size_t j = 1; j <= space.punctures(); ++j) {
      if (j != i) gens.push_back({i, PushGenerator::Dir::C, j});
    }
  }
  return gens;
}

RationalMatrix push_action(const PushGenerator& gen, const PuncturedH1& space) {
  if (gen.point < 1 || gen.point > space.punctures()) {
    throw std::invalid_argument("push_action: point index");
  }
  RationalVector dir;
  switch (gen.kind) {
    case PushGenerator::Dir::A:
      dir = space.unit_a(gen.index);
      break;
    case PushGenerator::Dir::B:
      dir = space.unit_b(gen.index);
      break;
    case PushGenerator::Dir::C:
      if (gen.index == gen.point) {
        throw std::invalid_argument("push_action: direction loops the pushed point");
      }
      dir = space.c_class(gen.index);
      break;
  }
  RationalVector ci = space.c_class(gen.point);
  std::size_t d = space.dim();
  std::vector<RationalVector> rows(d, RationalVector(d));
  for (std::size_t t = 0; t < d; ++t) rows[t][t] = Rational(1);
  for (std::size_t t = 0; t < d; ++t) {
    RationalVector e(d);
    e[t] = Rational(1);
    Rational c = space.pairing(dir, e);
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < d; ++r) rows[r][t] += c * ci[r];
  }
  return RationalMatrix::from_rows(rows, d);
}

RationalMatrix dual_action(const RationalMatrix& a) {
  return a.inverse().transpose();
}

Subspace dual_invariants(const PuncturedH1& space) {
  std::vector<RationalMatrix> duals;
  for (const PushGenerator& gen : push_generators(space)) {
    duals.push_back(dual_action(push_action(gen, space)));
  }
  return fixed_subspace(duals, space.dim());
}

Subspace c_annihilator(const PuncturedH1& space) {
  // A functional kills every c_i iff its coordinates on the c-part of the
  // dual basis vanish; c_n imposes nothing new.
  std::vector<RationalVector> rows;
  rows.reserve(2 * space.genus());
  for (std::size_t s = 0; s < 2 * space.genus(); ++s) {
    RationalVector v(space.dim());
    v[s] = Rational(1);
    rows.push_back(std::move(v));
  }
  return Subspace::from_vectors(rows, space.dim());
}

bool quotient_action_trivial(const PuncturedH1& space) {
  Subspace w = c_annihilator(space);
  std::size_t d = space.dim();
  for (const PushGenerator& gen : push_generators(space)) {
    RationalMatrix dual = dual_action(push_action(gen, space));
    for (std::size_t t = 0; t < d; ++t) {
      RationalVector f(d);
      f[t] = Rational(1);
      RationalVector moved = dual * f;
      for (std::size_t s = 0; s < d; ++s) moved[s] -= f[s];
      if (!w.contains(moved)) return false;
    }
  }
  return true;
}

bool punctures_fixed_by_pushes(const PuncturedH1& space) {
  for (const PushGenerator& gen : push_generators(space)) {
    RationalMatrix a = push_action(gen, space);
    for (std::size_t i = 1; i <= space.punctures(); ++i) {
      RationalVector ci = space.c_class(i);
      if (a * ci != ci) return false;
    }
  }
  return true;
}

}  // namespace surfcoh
