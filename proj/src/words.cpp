#include "rfg/words.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "rfg/error.hpp"

namespace rfg {

namespace {

void check_same_alphabet(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw MismatchError("words over alphabets of rank " + std::to_string(u.rank()) + " and " +
                        std::to_string(v.rank()));
}

// Appends `l` to an already reduced letter stack.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Word Word::reduce(int rank, std::span<const Letter> raw) {
  Word w(rank);
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.gen < 0 || l.gen >= rank)
      throw DomainError("generator index " + std::to_string(l.gen) + " outside alphabet of rank " +
                        std::to_string(rank));
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
    push_reduced(w.letters_, l);
  }
  return w;
}

Word Word::generator(int rank, int gen, int power) {
  if (gen < 0 || gen >= rank)
    throw DomainError("generator index " + std::to_string(gen) + " outside alphabet of rank " +
                      std::to_string(rank));
  Word w(rank);
  const int sign = power < 0 ? -1 : 1;
  for (int i = 0; i < std::abs(power); ++i) w.letters_.push_back({gen, sign});
  return w;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

long Word::exponent_sum(int gen) const {
  long s = 0;
  for (const Letter& l : letters_)
    if (l.gen == gen) s += l.sign;
  return s;
}

Word& Word::operator*=(const Word& v) {
  check_same_alphabet(*this, v);
  for (const Letter& l : v.letters_) push_reduced(letters_, l);
  return *this;
}

Word operator*(const Word& u, const Word& v) {
  Word r = u;
  r *= v;
  return r;
}

Word free_reduce(int rank, std::span<const Letter> raw) { return Word::reduce(rank, raw); }

Word multiply(const Word& u, const Word& v) { return u * v; }

Word invert(const Word& u) { return u.inverse(); }

Word power(const Word& u, long k) {
  const Word base = k < 0 ? u.inverse() : u;
  Word r(u.rank());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r *= base;
  return r;
}

Word commutator(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  return u.inverse() * v.inverse() * u * v;
}

Word left_normed_commutator(std::span<const Word> items) {
  if (items.empty()) throw DomainError("left-normed commutator of an empty list");
  Word acc = items.front();
  for (const Word& next : items.subspan(1)) acc = commutator(acc, next);
  return acc;
}

Word substitute(const Word& w, const std::map<int, Word>& images) {
  int target_rank = -1;
  for (const auto& [gen, img] : images) {
    if (target_rank < 0)
      target_rank = img.rank();
    else if (img.rank() != target_rank)
      throw MismatchError("substitution images over different alphabets");
  }
  if (target_rank < 0) {
    if (!w.empty()) throw DomainError("missing image for generator " + std::to_string(w.letters()[0].gen));
    return Word();
  }
  Word out(target_rank);
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw DomainError("missing image for generator " + std::to_string(l.gen));
    out *= l.sign > 0 ? it->second : it->second.inverse();
  }
  return out;
}

std::vector<Word> weight_c_normal_generators(int rank, int c) {
  if (c < 2) throw DomainError("weight must be at least 2");
  if (rank < 2) throw DomainError("rank must be at least 2");
  std::vector<Word> out;
  // Odometer over (x1, ..., xc) in lexicographic order.
  std::vector<int> idx(static_cast<std::size_t>(c), 0);
  std::vector<Word> items(static_cast<std::size_t>(c));
  while (true) {
    if (idx[0] != idx[1]) {
      for (int i = 0; i < c; ++i) items[i] = Word::generator(rank, idx[i]);
      out.push_back(left_normed_commutator(items));
    }
    int pos = c - 1;
    while (pos >= 0 && ++idx[pos] == rank) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw ParseError("invalid generator name '" + n + "'");
    for (char ch : n)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw ParseError("invalid generator name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw ParseError("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::ab() { return Alphabet({"a", "b"}); }

Alphabet Alphabet::wxyz() { return Alphabet({"w", "x", "y", "z"}); }

Alphabet Alphabet::product_ab(int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_item_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    return ch == '[' || ch == '(' || ch == '1' || std::isalpha(static_cast<unsigned char>(ch));
  }

  Word expression() {
    Word acc(alphabet_.rank());
    while (at_item_start()) acc *= item();
    return acc;
  }

  Word item() {
    Word base(alphabet_.rank());
    const char ch = text_[pos_];
    if (ch == '[') {
      ++pos_;
      std::vector<Word> parts{expression()};
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parts.push_back(expression());
        skip_space();
      }
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      if (parts.size() < 2) fail("commutator needs at least two entries");
      base = left_normed_commutator(parts);
    } else if (ch == '(') {
      ++pos_;
      base = expression();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    } else if (ch == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("identifiers must start with a letter");
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const int gen = alphabet_.index_of(name);
      if (gen < 0) fail("unknown generator '" + std::string(name) + "'");
      base = Word::generator(alphabet_.rank(), gen);
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      long k = 0;
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr == first) fail("expected an integer exponent");
      if (k == 0) fail("exponent must be nonzero");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      base = power(base, k);
    }
    return base;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return WordParser(text, alphabet).parse();
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.rank() != alphabet.rank()) throw MismatchError("alphabet rank does not match word");
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long run = static_cast<long>(j - i) * letters[i].sign;
    if (i > 0) out << ' ';
    out << alphabet.name(letters[i].gen);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

}  // namespace rfg
