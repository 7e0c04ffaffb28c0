#include "rfg/coset.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "rfg/error.hpp"

namespace rfg {

int CosetTable::act(int coset, const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (coset == kUndefined) return kUndefined;
    coset = entry(coset, column(l));
  }
  return coset;
}

namespace {

// Column-encoded letter sequence; inverse column of c is c ^ 1.
using ColumnWord = std::vector<int>;

ColumnWord to_columns(const Word& w) {
  ColumnWord out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) out.push_back(CosetTable::column(l));
  return out;
}

ColumnWord cyclically_reduce(ColumnWord w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == (w[hi - 1] ^ 1)) {
    ++lo;
    --hi;
  }
  return ColumnWord(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
}

class FelschEnumerator {
 public:
  FelschEnumerator(const Presentation& pres, const std::vector<Word>& subgroup, long limit)
      : ncols_(2 * pres.generators.rank()), limit_(limit), by_first_(static_cast<std::size_t>(ncols_)) {
    for (const Word& r : pres.relators) {
      if (r.rank() != pres.generators.rank()) throw MismatchError("relator over a different alphabet");
      ColumnWord base = cyclically_reduce(to_columns(r));
      if (base.empty()) continue;
      ColumnWord inv(base.rbegin(), base.rend());
      for (int& c : inv) c ^= 1;
      for (const ColumnWord* w : {&base, &inv})
        for (std::size_t k = 0; k < w->size(); ++k) {
          ColumnWord rot(w->begin() + static_cast<long>(k), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<long>(k));
          by_first_[static_cast<std::size_t>(rot.front())].push_back(std::move(rot));
        }
    }
    for (const Word& h : subgroup) {
      if (h.rank() != pres.generators.rank()) throw MismatchError("subgroup generator over a different alphabet");
      subgroup_.push_back(to_columns(h));
    }
  }

  CosetTable run() {
    new_coset();
    for (const ColumnWord& h : subgroup_) {
      if (!scan_and_fill(0, h)) return finish(EnumerationStatus::kExhausted);
      process_deductions();
    }
    for (int alpha = 0; alpha < rows(); ++alpha) {
      for (int x = 0; x < ncols_ && live(alpha); ++x) {
        if (entry(alpha, x) != CosetTable::kUndefined) continue;
        if (!define(alpha, x)) return finish(EnumerationStatus::kExhausted);
        process_deductions();
      }
    }
    return finish(EnumerationStatus::kComplete);
  }

 private:
  int& entry(int coset, int col) { return table_[static_cast<std::size_t>(coset) * ncols_ + col]; }
  bool live(int coset) const { return parent_[static_cast<std::size_t>(coset)] == coset; }

  bool new_coset() {
    if (defined_ >= limit_) return false;
    ++defined_;
    table_.resize(table_.size() + static_cast<std::size_t>(ncols_), CosetTable::kUndefined);
    parent_.push_back(static_cast<int>(parent_.size()));
    return true;
  }

  // Row count of the flat table.
  int rows() const { return static_cast<int>(parent_.size()); }

  bool define(int alpha, int x) {
    if (!new_coset()) return false;
    const int beta = rows() - 1;
    entry(alpha, x) = beta;
    entry(beta, x ^ 1) = alpha;
    deductions_.push_back({alpha, x});
    return true;
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [alpha, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(alpha)) continue;
      for (const ColumnWord& w : by_first_[static_cast<std::size_t>(x)]) {
        scan(alpha, w);
        if (!live(alpha)) break;
      }
      if (!live(alpha)) continue;
      const int beta = entry(alpha, x);
      if (beta == CosetTable::kUndefined || !live(beta)) continue;
      for (const ColumnWord& w : by_first_[static_cast<std::size_t>(x ^ 1)]) {
        scan(beta, w);
        if (!live(beta)) break;
      }
    }
  }

  // Scans w from alpha in both directions; closes a gap of length one by a
  // deduction and a gap of length zero by a coincidence.
  void scan(int alpha, const ColumnWord& w) {
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && entry(f, w[i]) != CosetTable::kUndefined) f = entry(f, w[i++]);
    if (i > j) {
      if (f != alpha) coincidence(f, alpha);
      return;
    }
    while (j >= i && entry(b, w[j] ^ 1) != CosetTable::kUndefined) b = entry(b, w[j--] ^ 1);
    if (j < i) {
      coincidence(f, b);
    } else if (j == i) {
      entry(f, w[i]) = b;
      entry(b, w[i] ^ 1) = f;
      deductions_.push_back({f, w[i]});
    }
  }

  // As scan, but fills gaps with new cosets. False when the limit is hit.
  bool scan_and_fill(int alpha, const ColumnWord& w) {
    if (w.empty()) return true;
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[i]) != CosetTable::kUndefined) f = entry(f, w[i++]);
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return true;
      }
      while (j >= i && entry(b, w[j] ^ 1) != CosetTable::kUndefined) b = entry(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (j == i) {
        entry(f, w[i]) = b;
        entry(b, w[i] ^ 1) = f;
        deductions_.push_back({f, w[i]});
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  int rep(int k) {
    int root = k;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(k)] != root) {
      const int next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    const int lo = std::min(k, l), hi = std::max(k, l);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue.push_back(hi);
  }

  void coincidence(int alpha, int beta) {
    std::deque<int> queue;
    merge(alpha, beta, queue);
    while (!queue.empty()) {
      const int gamma = queue.front();
      queue.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        const int delta = entry(gamma, x);
        if (delta == CosetTable::kUndefined) continue;
        entry(delta, x ^ 1) = CosetTable::kUndefined;
        const int mu = rep(gamma), nu = rep(delta);
        if (entry(mu, x) != CosetTable::kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, x ^ 1) != CosetTable::kUndefined) {
          merge(mu, entry(nu, x ^ 1), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1) = mu;
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  CosetTable finish(EnumerationStatus status) {
    std::vector<int> renumber(static_cast<std::size_t>(rows()), CosetTable::kUndefined);
    int next = 0;
    for (int k = 0; k < rows(); ++k)
      if (live(k)) renumber[static_cast<std::size_t>(k)] = next++;
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(next));
    for (int k = 0; k < rows(); ++k) {
      if (!live(k)) continue;
      std::vector<int> row(static_cast<std::size_t>(ncols_));
      for (int x = 0; x < ncols_; ++x) {
        const int e = entry(k, x);
        row[static_cast<std::size_t>(x)] = e == CosetTable::kUndefined ? e : renumber[static_cast<std::size_t>(rep(e))];
      }
      out.push_back(std::move(row));
    }
    return CosetTable(ncols_ / 2, std::move(out), status, defined_);
  }

  int ncols_;
  long limit_;
  long defined_ = 0;
  std::vector<std::vector<ColumnWord>> by_first_;
  std::vector<ColumnWord> subgroup_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens, long limit) {
  if (limit < 1) throw DomainError("coset limit must be at least 1");
  return FelschEnumerator(pres, subgroup_gens, limit).run();
}

int index(const CosetTable& table) {
  if (!table.complete()) throw DomainError("index of an incomplete coset table");
  return table.num_rows();
}

Presentation reidemeister_schreier(const Presentation& pres, const CosetTable& table) {
  if (!table.complete()) throw DomainError("Reidemeister-Schreier needs a complete coset table");
  const int ngens = pres.generators.rank();
  if (table.num_generators() != ngens) throw MismatchError("coset table and presentation disagree");
  const int n = table.num_rows();

  // Spanning tree by breadth-first search in column order; tree[(i, g)]
  // marks the positive edge i --g--> i^g as a tree edge.
  std::vector<char> tree(static_cast<std::size_t>(n * ngens), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int col = 0; col < 2 * ngens; ++col) {
      const int j = table.entry(i, col);
      if (seen[static_cast<std::size_t>(j)]) continue;
      seen[static_cast<std::size_t>(j)] = 1;
      queue.push_back(j);
      const int g = col / 2;
      if (col % 2 == 0)
        tree[static_cast<std::size_t>(i * ngens + g)] = 1;
      else
        tree[static_cast<std::size_t>(j * ngens + g)] = 1;
    }
  }

  std::vector<int> schreier_index(static_cast<std::size_t>(n * ngens), -1);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < ngens; ++g)
      if (!tree[static_cast<std::size_t>(i * ngens + g)]) {
        schreier_index[static_cast<std::size_t>(i * ngens + g)] = static_cast<int>(names.size());
        names.push_back("s" + std::to_string(i) + "_" + pres.generators.name(g));
      }
  const int rank = static_cast<int>(names.size());

  Presentation out{Alphabet(std::move(names)), {}};
  for (int i = 0; i < n; ++i)
    for (const Word& r : pres.relators) {
      std::vector<Letter> raw;
      int coset = i;
      for (const Letter& l : r.letters()) {
        if (l.sign > 0) {
          const int s = schreier_index[static_cast<std::size_t>(coset * ngens + l.gen)];
          if (s >= 0) raw.push_back({s, 1});
          coset = table.entry(coset, CosetTable::column(l));
        } else {
          const int prev = table.entry(coset, CosetTable::column(l));
          const int s = schreier_index[static_cast<std::size_t>(prev * ngens + l.gen)];
          if (s >= 0) raw.push_back({s, -1});
          coset = prev;
        }
      }
      Word rewritten = Word::reduce(rank, raw);
      if (!rewritten.empty()) out.relators.push_back(std::move(rewritten));
    }
  return out;
}

Presentation direct_product_presentation(int rank, int factors) {
  if (rank < 1 || factors < 1) throw DomainError("direct product needs rank and factor count >= 1");
  if (rank > 26) throw DomainError("direct product presentation supports rank <= 26");
  std::vector<std::string> names;
  for (int f = 1; f <= factors; ++f)
    for (int i = 0; i < rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)) + std::to_string(f));
  const int total = rank * factors;
  Presentation pres{Alphabet(std::move(names)), {}};
  for (int p = 0; p < total; ++p)
    for (int q = p + 1; q < total; ++q)
      if (p / rank != q / rank)
        pres.relators.push_back(commutator(Word::generator(total, p), Word::generator(total, q)));
  return pres;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Calls f(key, value) for each `key: value` line.
template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t start = 0;
  int lineno = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    ++lineno;
    if (!line.empty() && line.front() != '#') {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
      f(trim(line.substr(0, colon)), trim(line.substr(colon + 1)), lineno);
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  bool have_gens = false;
  std::vector<std::string> relator_text;
  for_each_line(text, [&](std::string_view key, std::string_view value, int lineno) {
    if (key == "gens") {
      if (have_gens) throw ParseError("line " + std::to_string(lineno) + ": duplicate 'gens'");
      have_gens = true;
      std::istringstream in{std::string(value)};
      for (std::string name; in >> name;) names.push_back(name);
    } else if (key == "rel") {
      relator_text.emplace_back(value);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + std::string(key) + "'");
    }
  });
  if (!have_gens) throw ParseError("presentation lacks a 'gens:' line");
  Presentation pres{Alphabet(std::move(names)), {}};
  for (const std::string& r : relator_text) pres.relators.push_back(parse_word(r, pres.generators));
  return pres;
}

std::vector<Word> parse_subgroup(std::string_view text, const Alphabet& alphabet) {
  std::vector<Word> gens;
  for_each_line(text, [&](std::string_view key, std::string_view value, int lineno) {
    if (key != "gen") throw ParseError("line " + std::to_string(lineno) + ": expected 'gen: <word>'");
    gens.push_back(parse_word(value, alphabet));
  });
  return gens;
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& name : pres.generators.names()) out << ' ' << name;
  out << '\n';
  for (const Word& r : pres.relators) out << "rel: " << format_word(r, pres.generators) << '\n';
  return out.str();
}

std::string format_table(const CosetTable& table) {
  std::ostringstream out;
  for (int i = 0; i < table.num_rows(); ++i) {
    for (int x = 0; x < 2 * table.num_generators(); ++x) {
      if (x > 0) out << ' ';
      const int e = table.entry(i, x);
      if (e == CosetTable::kUndefined)
        out << '-';
      else
        out << e;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rfg
