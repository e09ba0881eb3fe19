#pragma once

#include <random>
#include <vector>

#include "dsmt/proposition.hpp"

namespace testing_support {

/// A random proposition over n atoms: a random family of clauses, canonicalized.
/// May be BOTTOM; never TOP unless `allow_top`.
inline dsmt::Proposition random_proposition(std::mt19937_64& rng, unsigned n, bool allow_top = false) {
  std::uniform_int_distribution<unsigned> count(0, 4);
  std::uniform_int_distribution<dsmt::Clause> mask(allow_top ? 0 : 1, (dsmt::Clause{1} << n) - 1);
  std::vector<dsmt::Clause> family;
  for (unsigned k = count(rng); k > 0; --k) family.push_back(mask(rng));
  return dsmt::Proposition::from_clauses(std::move(family));
}

/// Non-BOTTOM, non-TOP.
inline dsmt::Proposition random_proper(std::mt19937_64& rng, unsigned n) {
  while (true) {
    auto p = random_proposition(rng, n);
    if (!p.is_bottom()) return p;
  }
}

}  // namespace testing_support
