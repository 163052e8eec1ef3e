#pragma once

#include <optional>

#include "regquot/clifford.hpp"
#include "regquot/conormal.hpp"

namespace regquot {

// K(n) = E(n)/I_n with E(n)_* = ZZ_(p)[v_1..v_{n-1}, v_n^{+-1}] (not
// completed), |v_i| = 2(p^i - 1), I_n = (p, v_1, ..., v_{n-1}).  Products
// are commutative at odd p; at p = 2 the obstruction of the k-th product
// is recorded through its K(n)-image: 0 for k < n-1 and v_n for k = n-1.
struct MoravaScenario {
  long p = 0;
  int n = 0;
  Ring ring;
  QuotientRingSpec F;
  // c(mu_k^op), equal to c(mu_k) at every prime in this model.
  std::vector<RingElement> opposite_obstructions;
};

int morava_degree(long p, int i);

// D defaults to |v_n| + 2, L to 2.  WindowTooSmall if D < |v_n| + 2.
MoravaScenario build_scenario(long p, int n, std::optional<int> degree = std::nullopt, int laurent = 2);

AlgebraPresentation kn_homology(const MoravaScenario& s);
AlgebraPresentation kn_cohomology(const MoravaScenario& s);
BilinearForm kn_form(const MoravaScenario& s);

}  // namespace regquot
