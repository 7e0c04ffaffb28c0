#pragma once

// Elements and finitely generated subgroups of F^E, F = F(a, b), for a
// finite set E of integers, together with the homomorphism
//
//     phi: Gamma -> F^Z,  phi(w)(n) = a, phi(x)(n) = b,
//                         phi(y)(n) = a^n, phi(z)(n) = b^n
//
// and the S(E, c) / T(g, c) subgroup families built from it.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rfg/series.hpp"
#include "rfg/words.hpp"

namespace rfg {

using IndexSet = std::set<int>;

// Element of F^E: one word over {a, b} per coordinate.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::map<int, Word> components);
  // Identity at every coordinate of E.
  static Tuple identity(const IndexSet& E);

  IndexSet index_set() const;
  const std::map<int, Word>& components() const { return components_; }
  const Word& at(int n) const;
  bool is_identity() const;

  // Restriction to E' (every index of E' must be present).
  Tuple restrict(const IndexSet& sub) const;
  // Coordinate n is moved to n + t.
  Tuple shifted(int t) const;

  friend Tuple operator*(const Tuple& u, const Tuple& v);
  Tuple inverse() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

 private:
  std::map<int, Word> components_;
};

enum class Provenance { kSFamily, kTFamily, kCustom };

std::string_view provenance_name(Provenance p);

struct SubdirectSpec {
  IndexSet E;
  int c = 2;
  std::vector<Tuple> generators;
  // Set only when the generators include the coordinate-wise normal
  // generators of gamma_c, so the subgroup contains gamma_c(F^E).
  bool contains_gamma_c = false;
  Provenance provenance = Provenance::kCustom;
};

// True when, for every n in E, each weight-c normal generator embedded at n
// occurs among the generators. This is what contains_gamma_c asserts.
bool has_gamma_c_witness(const SubdirectSpec& spec);

// phi(g)(n), freely reduced; g over {w, x, y, z}.
Word phi(const Word& g, int n);
// (phi(g)(n))_{n in E}.
Tuple phi_tuple(const Word& g, const IndexSet& E);

// The tuple with r at coordinate n and 1 elsewhere.
Tuple embed_at(const IndexSet& E, int n, const Word& r);

// Generators: phi_tuple of w, x, y, z, then for each n in E (ascending) the
// weight-c normal generators embedded at n.
SubdirectSpec build_S(const IndexSet& E, int c);

// Index set {1, ..., n_factors}; generators: g_tuples followed by the
// embedded weight-c normal generators at each coordinate.
SubdirectSpec build_T(int n_factors, const std::vector<Tuple>& g_tuples, int c);

// Coordinate-wise restriction of every generator to E'.
SubdirectSpec project(const SubdirectSpec& spec, const IndexSet& sub);

IndexSet translate(const IndexSet& E, int t);
// Re-indexes every generator n -> n + t.
SubdirectSpec translate_spec(const SubdirectSpec& spec, int t);

// Gamma-side shift y -> y w^-1, z -> z x^-1, applied t times (t may be
// negative). Intertwines phi with re-indexing:
// phi(shift(g, t))(n + t) = phi(g)(n).
Word gamma_shift(const Word& g, int t);

// Word over a1 b1 a2 b2 ... (coordinates of E in ascending order) for a
// tuple, i.e. the element of the free product presentation of F^E.
Word tuple_to_product_word(const Tuple& tuple);

// Certificate for one instance of S(E, c) meet Phi_n = gamma_c(Phi_n).
struct TheoremGCertificate {
  bool hypothesis_met = false;  // phi(g)(m) = 1 for every m in E \ {n}
  std::vector<int> vanishing_points;  // E \ {n}
  // pi_W with |W| < c vanish at every point of E \ {n}.
  bool low_degree_vanish_at_points = false;
  // ... and are therefore identically zero.
  bool low_degree_identically_zero = false;
  // phi(g)(n) lies in gamma_c.
  bool conclusion_in_gamma = false;
  Word image_at_n;

  bool certified() const {
    return hypothesis_met && low_degree_vanish_at_points && low_degree_identically_zero &&
           conclusion_in_gamma;
  }
};

// Requires |E| >= c + 1 and n in E; throws DomainError otherwise.
TheoremGCertificate verify_theoremG_instance(const IndexSet& E, int c, int n, const Word& g);

// Text formats.
//   tuple:  `1: a ; 2: a^2 ; 3: 1`   (indices ascending)
//   spec:   header `E = {1,2}, c = 3[, family = S|T|custom][, contains_gamma_c]`
//           followed by one tuple per line.
std::string format_tuple(const Tuple& t);
Tuple parse_tuple(std::string_view text);
std::string format_index_set(const IndexSet& E);
IndexSet parse_index_set(std::string_view text);
std::string format_spec(const SubdirectSpec& spec);
SubdirectSpec parse_spec(std::string_view text);

}  // namespace rfg
