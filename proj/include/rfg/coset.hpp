#pragma once

// Todd-Coxeter coset enumeration (Felsch strategy) and the
// Reidemeister-Schreier rewriting process.

#include <string>
#include <string_view>
#include <vector>

#include "rfg/words.hpp"

namespace rfg {

struct Presentation {
  Alphabet generators;
  std::vector<Word> relators;
};

enum class EnumerationStatus { kComplete, kExhausted };

// Columns are 2*g (generator g) and 2*g+1 (its inverse); entries are coset
// numbers or kUndefined. Coset 0 is the subgroup coset. Complete tables are
// compacted so that live cosets are numbered 0..n-1.
class CosetTable {
 public:
  static constexpr int kUndefined = -1;

  CosetTable() = default;
  CosetTable(int num_generators, std::vector<std::vector<int>> rows, EnumerationStatus status,
             long cosets_defined)
      : num_generators_(num_generators), rows_(std::move(rows)), status_(status), cosets_defined_(cosets_defined) {}

  int num_generators() const { return num_generators_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  EnumerationStatus status() const { return status_; }
  bool complete() const { return status_ == EnumerationStatus::kComplete; }
  long cosets_defined() const { return cosets_defined_; }

  int entry(int coset, int column) const { return rows_.at(coset).at(column); }
  static int column(Letter l) { return 2 * l.gen + (l.sign > 0 ? 0 : 1); }

  // Image of `coset` under `w`, or kUndefined if the path leaves the table.
  int act(int coset, const Word& w) const;

 private:
  int num_generators_ = 0;
  std::vector<std::vector<int>> rows_;
  EnumerationStatus status_ = EnumerationStatus::kExhausted;
  long cosets_defined_ = 0;
};

inline constexpr long kDefaultCosetLimit = 1'000'000;

// Enumerates the cosets of <subgroup_gens> in the presented group. `limit`
// bounds the total number of cosets ever defined; running out is reported
// through the table status, not an exception.
CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                        long limit = kDefaultCosetLimit);

// Number of cosets; throws DomainError for an incomplete table.
int index(const CosetTable& table);

// Presentation of the subgroup on Schreier generators `s<coset>_<gen>`,
// relators the rewritten conjugates of the input relators, freely reduced,
// with empty relators dropped. Throws DomainError for an incomplete table.
Presentation reidemeister_schreier(const Presentation& pres, const CosetTable& table);

// r*k generators a1 b1 ... (names from Alphabet::product_ab for r = 2,
// `g<factor>_<i>` otherwise) and the commutators between generators of
// distinct factors.
Presentation direct_product_presentation(int rank, int factors);

// Files: `gens: a b c` then lines `rel: <word>`; subgroup files hold lines
// `gen: <word>`. Blank lines and lines starting with '#' are skipped.
Presentation parse_presentation(std::string_view text);
std::vector<Word> parse_subgroup(std::string_view text, const Alphabet& alphabet);
std::string format_presentation(const Presentation& pres);
// One row per coset, space-separated targets in column order (`-` for
// undefined entries).
std::string format_table(const CosetTable& table);

}  // namespace rfg
