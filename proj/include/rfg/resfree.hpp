#pragma once

// Word problem for finitely presented residually free groups, as a pair of
// semidecision procedures run side by side:
//
//  * triviality: search products of conjugates of relators u r^{+-1} u^-1
//    that freely reduce to the target word;
//  * nontriviality: enumerate maps of the generators into F(x, y), keep those
//    killing every relator, and look for one that does not kill the target.
//
// Residual freeness makes the second search complete; the first is complete
// in any finitely presented group. Budgets count search nodes, so results do
// not depend on timing.

#include <optional>
#include <variant>
#include <vector>

#include "rfg/coset.hpp"
#include "rfg/words.hpp"

namespace rfg {

// u * relators[relator]^sign * u^-1.
struct ConjugateFactor {
  Word conjugator;
  int relator = 0;
  int sign = 1;

  friend bool operator==(const ConjugateFactor&, const ConjugateFactor&) = default;
};

struct TrivialWitness {
  std::vector<ConjugateFactor> factors;  // empty product for the identity
  friend bool operator==(const TrivialWitness&, const TrivialWitness&) = default;
};

// images[i] is the image of generator i in F(x, y).
struct NontrivialWitness {
  std::vector<Word> images;
  friend bool operator==(const NontrivialWitness&, const NontrivialWitness&) = default;
};

struct Exhausted {
  long budget = 0;
  friend bool operator==(const Exhausted&, const Exhausted&) = default;
};

using Verdict = std::variant<TrivialWitness, NontrivialWitness, Exhausted>;

inline constexpr int kTargetRank = 2;
// {x, y}, the alphabet of nontriviality witnesses.
Alphabet target_alphabet();

// Pure word arithmetic; used by callers that want to re-check a verdict.
Word evaluate_witness(const Presentation& pres, const TrivialWitness& witness);
bool witness_holds(const Presentation& pres, const Word& word, const TrivialWitness& witness);
bool witness_holds(const Presentation& pres, const Word& word, const NontrivialWitness& witness);

std::optional<NontrivialWitness> wp_prove_nontrivial(const Presentation& pres, const Word& word, long budget);
std::optional<TrivialWitness> wp_prove_trivial(const Presentation& pres, const Word& word, long budget);

// Alternates one node of each search (giving all nodes to the survivor once
// one search has run dry) until a witness appears or the budget is spent.
Verdict word_problem(const Presentation& pres, const Word& word, long budget);

}  // namespace rfg
