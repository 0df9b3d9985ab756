#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace surfcoh {

// One letter of a free-group word: generator index (1-based) and exponent +-1.
struct Letter {
  std::size_t gen;
  int exp;
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

// Freely reduced word in the free group of the given rank.  The empty word is
// the identity.
class FreeWord {
 public:
  explicit FreeWord(std::size_t rank) : rank_(rank) {}

  // Reduces an arbitrary letter sequence; exponents may be any nonzero
  // integer and are expanded into +-1 letters.
  static FreeWord from_letters(std::size_t rank,
                               const std::vector<std::pair<std::size_t, long>>& raw);
  static FreeWord generator(std::size_t rank, std::size_t i);

  std::size_t rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  bool operator==(const FreeWord& o) const {
    return rank_ == o.rank_ && letters_ == o.letters_;
  }

  // Exponent-sum vector in Z^rank.
  std::vector<mpz_class> abelianize() const;

  std::string str() const;

 private:
  void push_reduced(std::size_t gen, int exp);

  std::size_t rank_;
  std::vector<Letter> letters_;
};

// u v u^-1 v^-1.
FreeWord commutator(const FreeWord& u, const FreeWord& v);

// Class of a word in the 2-step nilpotent quotient F/[[F,F],F]: the
// abelianization together with a coordinate vector over {x_s ^ x_t : s < t}.
// Multiplication collects via (h1,c1)(h2,c2) = (h1+h2, c1+c2+beta(h1,h2))
// with beta(h1,h2)_{st} = -(h1)_t (h2)_s for s < t; nil2_class is a
// homomorphism onto this group (self-checked in the test suite).
class NilClass2 {
 public:
  NilClass2() = default;
  NilClass2(std::size_t rank, std::vector<mpz_class> abelian,
            std::vector<mpz_class> comm);
  static NilClass2 identity(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<mpz_class>& abelian_part() const { return abelian_; }
  // C(rank, 2) coordinates, pairs (s, t) with s < t in lexicographic order.
  const std::vector<mpz_class>& commutator_part() const { return comm_; }
  bool abelian_is_zero() const;
  bool commutator_is_zero() const;
  bool is_trivial() const { return abelian_is_zero() && commutator_is_zero(); }

  NilClass2 operator*(const NilClass2& o) const;
  bool operator==(const NilClass2& o) const {
    return rank_ == o.rank_ && abelian_ == o.abelian_ && comm_ == o.comm_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<mpz_class> abelian_;
  std::vector<mpz_class> comm_;
};

// Image of a word in the 2-step nilpotent quotient, computed by the Magnus
// expansion truncated at degree two.
NilClass2 nil2_class(const FreeWord& w);

// True iff the commutator of the two image words survives in degree two of
// the lower central series, i.e. its nil2 class has nonzero wedge part.
bool fh_obstruction(const FreeWord& image_a1, const FreeWord& image_a2);

}  // namespace surfcoh
