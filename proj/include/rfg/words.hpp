#pragma once

// Free-group words over a finite alphabet.
//
// A word is stored letter by letter as (generator, +1/-1) pairs and is kept
// freely reduced at all times. Commutators follow the convention
//
//     [u, v] = u^-1 v^-1 u v
//
// and longer brackets are left-normed: [x1, x2, x3] = [[x1, x2], x3].

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rfg {

struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word {
 public:
  // The identity of the rank-0 free group; mostly useful as a placeholder.
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  // Freely reduces `raw`. Throws DomainError if a generator index is out of
  // range or a sign is not +-1.
  static Word reduce(int rank, std::span<const Letter> raw);

  // g^power (power may be zero or negative).
  static Word generator(int rank, int gen, int power = 1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;

  // Sum of the exponents of generator `gen`.
  long exponent_sum(int gen) const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

Word free_reduce(int rank, std::span<const Letter> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long k);

// [u, v] = u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

// [[x1, x2], x3], ... ; throws DomainError on an empty list.
Word left_normed_commutator(std::span<const Word> items);

// Applies the homomorphism generator i -> images.at(i). Every image must be
// over the same alphabet, and every generator occurring in `w` needs one.
Word substitute(const Word& w, const std::map<int, Word>& images);

// All left-normed commutators [x1, ..., xc] with x1 != x2, the xi ranging
// over the generators, in lexicographic order of (x1, ..., xc). These
// normally generate gamma_c of the free group.
std::vector<Word> weight_c_normal_generators(int rank, int c);

// Generator names, used for parsing and printing words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  static Alphabet ab();    // {a, b}
  static Alphabet wxyz();  // {w, x, y, z}
  // a1 b1 a2 b2 ... ; `count` copies of the {a, b} alphabet.
  static Alphabet product_ab(int count);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int gen) const { return names_.at(gen); }
  // -1 if absent.
  int index_of(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

// Word grammar: whitespace-separated tokens `name` or `name^k` (k a nonzero
// integer), bracket sugar `[e1, e2, ...]` for the left-normed commutator
// and parenthesised groups `(e)` (both optionally followed by `^k`), and `1`
// or the empty string for the identity. Throws ParseError.
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Run-length rendering such as `a^2 b^-1 a`; the identity renders as `1`.
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace rfg
