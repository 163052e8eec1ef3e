#pragma once

#include <map>
#include <utility>
#include <vector>

#include "regquot/clifford.hpp"

namespace regquot {

// Test oracle: rewrites flat tensor words with x (x) x -> q(x), where the
// cross terms come from polarizing q on sums of basis vectors.  Shares no
// code with the insertion algorithm.
struct BruteForceResult {
  std::vector<Mask> basis;
  // products[{u, v}] = normal form of u*v as word -> coefficient
  std::map<std::pair<Mask, Mask>, std::map<Mask, RingElement>> products;
  AlgebraPresentation presentation;
};

// word_bound caps the tensor word length; BoundTooSmall if a basis
// product needs longer words.  Rank at most 4.
BruteForceResult brute_force_presentation(const BilinearForm& b, std::size_t word_bound);

}  // namespace regquot
