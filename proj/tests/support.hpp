#pragma once

#include <random>

#include "doctest.h"
#include "rfg/words.hpp"

namespace rfg::testing {

inline constexpr unsigned kDefaultSeed = 20240611;

// Seed for randomized properties; override with `--rand-seed=<n>`.
inline unsigned seed() {
  const auto* opts = doctest::getContextOptions();
  return opts && opts->rand_seed != 0 ? opts->rand_seed : kDefaultSeed;
}

inline std::mt19937_64 make_rng(unsigned salt = 0) { return std::mt19937_64(seed() * 1000003ULL + salt); }

// Freely reduced word of length <= max_len (length drawn uniformly first).
inline Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, rank - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int len = len_dist(rng);
  std::vector<Letter> raw;
  while (static_cast<int>(raw.size()) < len) {
    const Letter l{gen_dist(rng), sign_dist(rng) ? 1 : -1};
    if (!raw.empty() && raw.back() == l.inverse()) continue;
    raw.push_back(l);
  }
  return Word::reduce(rank, raw);
}

}  // namespace rfg::testing
