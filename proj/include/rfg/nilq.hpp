#pragma once

// Integer linear algebra for abelianized quotients, and the VSP check.
//
// A subgroup H of F_i x F_j that contains gamma_c(F_i x F_j) has finite
// index exactly when its image in the nilpotent quotient (F/gamma_c)^2 does,
// and for nilpotent groups that is decided by the abelianization. So for
// specs carrying contains_gamma_c, finiteness of the exponent-sum lattice
// certifies the pairwise finite-index (VSP) condition.

#include <optional>
#include <string>
#include <vector>

#include "rfg/series.hpp"
#include "rfg/subdirect.hpp"

namespace rfg {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  // Throws DomainError unless every row has the same length.
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  // min(rows, cols) entries, d1 | d2 | ..., zeros last.
  std::vector<Integer> divisors;
  int rank = 0;
};

SmithForm smith_normal_form(IntegerMatrix m);

// One row per generator: exponent sums of a, b at coordinate i, then at j.
// Throws DomainError if a coordinate is missing from a generator.
IntegerMatrix abelianize(const std::vector<Tuple>& gens, int i, int j);

struct FiniteIndex {
  bool finite = false;
  std::optional<Integer> index;  // set when finite
};

// Index of the row lattice of m in Z^ambient_rank.
FiniteIndex finite_index_in_abelianization(const IntegerMatrix& m, int ambient_rank);

struct PairReport {
  int i = 0;
  int j = 0;
  bool finite = false;
  std::optional<Integer> abelianized_index;
  // For c = 2 the abelianized index is the index in F_i x F_j itself.
  bool index_is_exact = false;
};

struct VspReport {
  IndexSet E;
  int c = 0;
  std::vector<PairReport> pairs;  // i < j, lexicographic

  bool all_finite() const;
};

// Throws DomainError when spec.contains_gamma_c is false: without it the
// abelian criterion says nothing about finite index.
VspReport vsp_check(const SubdirectSpec& spec);

}  // namespace rfg
