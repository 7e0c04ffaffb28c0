#include "rfg/resfree.hpp"

#include "rfg/error.hpp"

namespace rfg {

Alphabet target_alphabet() { return Alphabet({"x", "y"}); }

namespace {

// Reduced words of length exactly `length`, letters ordered
// g0, g0^-1, g1, g1^-1, ... and words ordered lexicographically.
std::vector<Word> reduced_words_of_length(int rank, int length) {
  std::vector<std::vector<Letter>> layer{{}};
  for (int i = 0; i < length; ++i) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer)
      for (int g = 0; g < rank; ++g)
        for (int s : {1, -1}) {
          const Letter l{g, s};
          if (!w.empty() && w.back() == l.inverse()) continue;
          auto e = w;
          e.push_back(l);
          next.push_back(std::move(e));
        }
    layer = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(layer.size());
  for (const auto& w : layer) out.push_back(Word::reduce(rank, w));
  return out;
}

// Advances a base-`radix` odometer (most significant digit first). False
// when it wraps around.
bool advance(std::vector<std::size_t>& digits, std::size_t radix) {
  for (std::size_t p = digits.size(); p-- > 0;) {
    if (++digits[p] < radix) return true;
    digits[p] = 0;
  }
  return false;
}

// Enumerates homomorphisms to F(x, y) in order of increasing image length.
// Level L visits every assignment of words of length <= L that uses at
// least one word of length exactly L.
class NontrivialSearch {
 public:
  NontrivialSearch(const Presentation& pres, const Word& word) : pres_(pres), word_(word) {
    pool_ = reduced_words_of_length(kTargetRank, 0);
    digits_.assign(static_cast<std::size_t>(pres.generators.rank()), 0);
  }

  bool finished() const { return finished_; }

  // Tries the next assignment.
  std::optional<NontrivialWitness> step() {
    if (finished_) return std::nullopt;
    std::optional<NontrivialWitness> hit = test_current();
    move_next();
    return hit;
  }

 private:
  std::optional<NontrivialWitness> test_current() const {
    std::map<int, Word> images;
    for (std::size_t g = 0; g < digits_.size(); ++g) images.emplace(static_cast<int>(g), pool_[digits_[g]]);
    if (images.empty()) return std::nullopt;  // rank 0: only the identity
    if (substitute(word_, images).empty()) return std::nullopt;
    for (const Word& r : pres_.relators)
      if (!substitute(r, images).empty()) return std::nullopt;
    NontrivialWitness w;
    for (const auto& [g, img] : images) w.images.push_back(img);
    return w;
  }

  bool all_shorter() const {
    for (std::size_t d : digits_)
      if (d >= previous_level_size_) return false;
    return true;
  }

  void move_next() {
    if (digits_.empty()) {
      finished_ = true;
      return;
    }
    do {
      if (!advance(digits_, pool_.size())) {
        ++level_;
        previous_level_size_ = pool_.size();
        for (Word& w : reduced_words_of_length(kTargetRank, level_)) pool_.push_back(std::move(w));
      }
    } while (all_shorter());
  }

  const Presentation& pres_;
  const Word& word_;
  std::vector<Word> pool_;
  std::vector<std::size_t> digits_;
  std::size_t previous_level_size_ = 0;
  int level_ = 0;
  bool finished_ = false;
};

// Products of k conjugates u r^{+-1} u^-1 with |u| <= L, visited along the
// diagonals k + L = 1, 2, ... (k ascending within a diagonal), after the
// empty product. Tuples made only of atoms already available at L - 1 are
// skipped, since level (k, L - 1) saw them.
class TrivialSearch {
 public:
  TrivialSearch(const Presentation& pres, const Word& word) : pres_(pres), word_(word) {}

  bool finished() const { return finished_; }

  std::optional<TrivialWitness> step() {
    if (finished_) return std::nullopt;
    if (!started_) {
      started_ = true;
      if (pres_.relators.empty()) finished_ = true;
      else enter_level(1, 0);
      if (word_.empty()) return TrivialWitness{};
      return std::nullopt;
    }
    std::optional<TrivialWitness> hit = test_current();
    move_next();
    return hit;
  }

 private:
  void ensure_atoms(int L) {
    while (static_cast<int>(atom_level_end_.size()) <= L) {
      const int len = static_cast<int>(atom_level_end_.size());
      for (const Word& u : reduced_words_of_length(pres_.generators.rank(), len))
        for (int r = 0; r < static_cast<int>(pres_.relators.size()); ++r)
          for (int s : {1, -1}) {
            ConjugateFactor f{u, r, s};
            const Word& rel = pres_.relators[static_cast<std::size_t>(r)];
            atom_words_.push_back(u * (s > 0 ? rel : rel.inverse()) * u.inverse());
            atoms_.push_back(std::move(f));
          }
      atom_level_end_.push_back(atoms_.size());
    }
  }

  void enter_level(int k, int L) {
    k_ = k;
    L_ = L;
    ensure_atoms(L);
    radix_ = atom_level_end_[static_cast<std::size_t>(L)];
    floor_ = L == 0 ? 0 : atom_level_end_[static_cast<std::size_t>(L - 1)];
    digits_.assign(static_cast<std::size_t>(k), 0);
    if (L > 0 && radix_ == floor_)
      next_level();  // no conjugators of length exactly L
    else if (all_below_floor())
      next_tuple();
  }

  // Diagonal order: (k, L) -> (k + 1, L - 1), or start the next diagonal.
  void next_level() {
    if (L_ > 0)
      enter_level(k_ + 1, L_ - 1);
    else
      enter_level(1, k_);
  }

  bool all_below_floor() const {
    if (L_ == 0) return false;
    for (std::size_t d : digits_)
      if (d >= floor_) return false;
    return true;
  }

  // Next tuple within the level, or the first tuple of the next level.
  void next_tuple() {
    do {
      if (!advance(digits_, radix_)) {
        next_level();
        return;
      }
    } while (all_below_floor());
  }

  void move_next() { next_tuple(); }

  std::optional<TrivialWitness> test_current() const {
    Word product(word_.rank());
    for (std::size_t d : digits_) product *= atom_words_[d];
    if (product != word_) return std::nullopt;
    TrivialWitness w;
    for (std::size_t d : digits_) w.factors.push_back(atoms_[d]);
    return w;
  }

  const Presentation& pres_;
  const Word& word_;
  bool started_ = false;
  bool finished_ = false;
  std::vector<ConjugateFactor> atoms_;
  std::vector<Word> atom_words_;
  std::vector<std::size_t> atom_level_end_;  // atoms with |u| <= L are [0, end[L])
  std::vector<std::size_t> digits_;
  std::size_t radix_ = 0;
  std::size_t floor_ = 0;
  int k_ = 1;
  int L_ = 0;
};

void check_word(const Presentation& pres, const Word& word) {
  if (word.rank() != pres.generators.rank()) throw MismatchError("word is not over the presentation's generators");
  for (const Word& r : pres.relators)
    if (r.rank() != pres.generators.rank()) throw MismatchError("relator over a different alphabet");
}

}  // namespace

Word evaluate_witness(const Presentation& pres, const TrivialWitness& witness) {
  Word product(pres.generators.rank());
  for (const ConjugateFactor& f : witness.factors) {
    const Word& rel = pres.relators.at(static_cast<std::size_t>(f.relator));
    product *= f.conjugator * (f.sign > 0 ? rel : rel.inverse()) * f.conjugator.inverse();
  }
  return product;
}

bool witness_holds(const Presentation& pres, const Word& word, const TrivialWitness& witness) {
  return evaluate_witness(pres, witness) == word;
}

bool witness_holds(const Presentation& pres, const Word& word, const NontrivialWitness& witness) {
  if (static_cast<int>(witness.images.size()) != pres.generators.rank()) return false;
  std::map<int, Word> images;
  for (std::size_t g = 0; g < witness.images.size(); ++g) images.emplace(static_cast<int>(g), witness.images[g]);
  if (images.empty()) return false;
  for (const Word& r : pres.relators)
    if (!substitute(r, images).empty()) return false;
  return !substitute(word, images).empty();
}

std::optional<NontrivialWitness> wp_prove_nontrivial(const Presentation& pres, const Word& word, long budget) {
  check_word(pres, word);
  NontrivialSearch search(pres, word);
  for (long n = 0; n < budget && !search.finished(); ++n)
    if (auto w = search.step()) return w;
  return std::nullopt;
}

std::optional<TrivialWitness> wp_prove_trivial(const Presentation& pres, const Word& word, long budget) {
  check_word(pres, word);
  TrivialSearch search(pres, word);
  for (long n = 0; n < budget && !search.finished(); ++n)
    if (auto w = search.step()) return w;
  return std::nullopt;
}

Verdict word_problem(const Presentation& pres, const Word& word, long budget) {
  check_word(pres, word);
  TrivialSearch trivial(pres, word);
  NontrivialSearch nontrivial(pres, word);
  bool turn_trivial = true;
  for (long n = 0; n < budget; ++n) {
    if (trivial.finished() && nontrivial.finished()) break;
    const bool use_trivial = nontrivial.finished() || (turn_trivial && !trivial.finished());
    turn_trivial = !turn_trivial;
    if (use_trivial) {
      if (auto w = trivial.step()) return *w;
    } else {
      if (auto w = nontrivial.step()) return *w;
    }
  }
  return Exhausted{budget};
}

}  // namespace rfg
