#include "freegroup.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace surfcoh {

namespace {

std::size_t pair_index(std::size_t rank, std::size_t s, std::size_t t) {
  // s < t, both 0-based
  return s * rank - s * (s + 1) / 2 + (t - s - 1);
}

}  // namespace

void FreeWord::push_reduced(std::size_t gen, int exp) {
  if (gen < 1 || gen > rank_) {
    throw std::out_of_range("FreeWord: generator index out of range");
  }
  if (exp != 1 && exp != -1) throw std::invalid_argument("FreeWord: exponent must be +-1");
  if (!letters_.empty() && letters_.back().gen == gen && letters_.back().exp == -exp) {
    letters_.pop_back();
  } else {
    letters_.push_back({gen, exp});
  }
}

FreeWord FreeWord::from_letters(std::size_t rank,
                                const std::vector<std::pair<std::size_t, long>>& raw) {
  FreeWord w(rank);
  for (const auto& [gen, exp] : raw) {
    if (exp == 0) throw std::invalid_argument("FreeWord: zero exponent");
    int step = exp > 0 ? 1 : -1;
    for (long i = 0; i != exp; i += step) w.push_reduced(gen, step);
  }
  return w;
}

FreeWord FreeWord::generator(std::size_t rank, std::size_t i) {
  return from_letters(rank, {{i, 1}});
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("FreeWord: rank mismatch");
  FreeWord w = *this;
  for (const Letter& l : o.letters_) w.push_reduced(l.gen, l.exp);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w(rank_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back({it->gen, -it->exp});
  }
  return w;
}

std::vector<mpz_class> FreeWord::abelianize() const {
  std::vector<mpz_class> e(rank_, 0);
  for (const Letter& l : letters_) e[l.gen - 1] += l.exp;
  return e;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& l : letters_) {
    s += "x" + std::to_string(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

NilClass2::NilClass2(std::size_t rank, std::vector<mpz_class> abelian,
                     std::vector<mpz_class> comm)
    : rank_(rank), abelian_(std::move(abelian)), comm_(std::move(comm)) {
  if (abelian_.size() != rank_ || comm_.size() != rank_ * (rank_ - 1) / 2) {
    throw std::invalid_argument("NilClass2: wrong coordinate lengths");
  }
}

NilClass2 NilClass2::identity(std::size_t rank) {
  return NilClass2(rank, std::vector<mpz_class>(rank, 0),
                   std::vector<mpz_class>(rank * (rank - 1) / 2, 0));
}

bool NilClass2::abelian_is_zero() const {
  for (const auto& x : abelian_) {
    if (x != 0) return false;
  }
  return true;
}

bool NilClass2::commutator_is_zero() const {
  for (const auto& x : comm_) {
    if (x != 0) return false;
  }
  return true;
}

NilClass2 NilClass2::operator*(const NilClass2& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("NilClass2: rank mismatch");
  std::vector<mpz_class> abelian(rank_);
  for (std::size_t i = 0; i < rank_; ++i) abelian[i] = abelian_[i] + o.abelian_[i];
  std::vector<mpz_class> comm(comm_.size());
  for (std::size_t s = 0; s < rank_; ++s) {
    for (std::size_t t = s + 1; t < rank_; ++t) {
      std::size_t i = pair_index(rank_, s, t);
      comm[i] = comm_[i] + o.comm_[i] - abelian_[t] * o.abelian_[s];
    }
  }
  return NilClass2(rank_, std::move(abelian), std::move(comm));
}

// Magnus expansion truncated at degree two: x_i -> 1 + X_i,
// x_i^-1 -> 1 - X_i + X_i^2.  Tracking the degree-one vector alpha and the
// degree-two matrix beta, the wedge coordinate of the class is
// beta_{st} - alpha_s alpha_t for s < t (the shuffle identity strips the
// symmetric part).
NilClass2 nil2_class(const FreeWord& w) {
  std::size_t h = w.rank();
  std::vector<mpz_class> alpha(h, 0);
  std::vector<mpz_class> beta(h * h, 0);
  for (const Letter& l : w.letters()) {
    std::size_t g = l.gen - 1;
    // beta += alpha (outer) deg1(letter); deg2(letter) only hits (g, g)
    for (std::size_t s = 0; s < h; ++s) beta[s * h + g] += alpha[s] * l.exp;
    if (l.exp < 0) beta[g * h + g] += 1;
    alpha[g] += l.exp;
  }
  std::vector<mpz_class> comm(h * (h - 1) / 2);
  for (std::size_t s = 0; s < h; ++s) {
    for (std::size_t t = s + 1; t < h; ++t) {
      comm[pair_index(h, s, t)] = beta[s * h + t] - alpha[s] * alpha[t];
    }
  }
  return NilClass2(h, std::move(alpha), std::move(comm));
}

bool fh_obstruction(const FreeWord& image_a1, const FreeWord& image_a2) {
  if (image_a1.rank() != image_a2.rank()) {
    throw std::invalid_argument("fh_obstruction: rank mismatch");
  }
  if (image_a1.rank() < 2) {
    throw std::invalid_argument("fh_obstruction: rank must be >= 2");
  }
  return !nil2_class(commutator(image_a1, image_a2)).commutator_is_zero();
}

}  // namespace surfcoh
