#include "rfg/nilq.hpp"

#include <algorithm>
#include <utility>

#include "rfg/error.hpp"
#include "rfg/magnus.hpp"

namespace rfg {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Pivot: nonzero entry of least absolute value in the trailing block.
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c)
          if (m(r, c) != 0 && (!found || abs(m(r, c)) < best)) {
            best = abs(m(r, c));
            pr = r;
            pc = c;
            found = true;
          }
      if (!found) break;
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        const Integer q = m(r, t) / m(t, t);  // truncating division
        for (std::size_t c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        const Integer q = m(t, c) / m(t, t);
        for (std::size_t r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any trailing entry not divisible by the pivot into
      // row t and reduce again.
      bool divides = true;
      for (std::size_t r = t + 1; r < m.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (m(r, c) % m(t, t) != 0) {
            for (std::size_t k = t; k < m.cols(); ++k) m(t, k) += m(r, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  SmithForm sf;
  for (std::size_t t = 0; t < n; ++t) {
    sf.divisors.push_back(abs(m(t, t)));
    if (m(t, t) != 0) ++sf.rank;
  }
  return sf;
}

IntegerMatrix abelianize(const std::vector<Tuple>& gens, int i, int j) {
  IntegerMatrix m(gens.size(), 2 * kFreeRank);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    const Word& u = gens[r].at(i);
    const Word& v = gens[r].at(j);
    for (int g = 0; g < kFreeRank; ++g) {
      m(r, static_cast<std::size_t>(g)) = u.exponent_sum(g);
      m(r, static_cast<std::size_t>(kFreeRank + g)) = v.exponent_sum(g);
    }
  }
  return m;
}

FiniteIndex finite_index_in_abelianization(const IntegerMatrix& m, int ambient_rank) {
  if (static_cast<int>(m.cols()) != ambient_rank)
    throw DomainError("matrix width does not match the ambient rank");
  const SmithForm sf = smith_normal_form(m);
  if (sf.rank != ambient_rank) return {false, std::nullopt};
  Integer index = 1;
  for (int k = 0; k < ambient_rank; ++k) index *= sf.divisors[static_cast<std::size_t>(k)];
  return {true, index};
}

bool VspReport::all_finite() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.finite; });
}

VspReport vsp_check(const SubdirectSpec& spec) {
  if (!spec.contains_gamma_c)
    throw DomainError("vsp_check requires a spec known to contain gamma_c of the product");
  VspReport report{spec.E, spec.c, {}};
  for (auto it = spec.E.begin(); it != spec.E.end(); ++it)
    for (auto jt = std::next(it); jt != spec.E.end(); ++jt) {
      const FiniteIndex fi = finite_index_in_abelianization(abelianize(spec.generators, *it, *jt), 2 * kFreeRank);
      report.pairs.push_back({*it, *jt, fi.finite, fi.index, spec.c == 2});
    }
  return report;
}

}  // namespace rfg
