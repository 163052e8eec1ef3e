#include <cmath>

#include "doctest.h"
#include "regquot/derivations.hpp"
#include "regquot/error.hpp"
#include "regquot/morava.hpp"
#include "support.hpp"

using namespace regquot;
using namespace testing_support;

TEST_CASE("Morava degrees") {
  CHECK(morava_degree(2, 1) == 2);
  CHECK(morava_degree(2, 3) == 14);
  CHECK(morava_degree(3, 2) == 16);
  CHECK(morava_degree(5, 2) == 48);
  // the obstruction degree of the top generator equals |v_n| at p = 2
  for (int n = 1; n <= 4; ++n) CHECK(2 * morava_degree(2, n - 1) + 2 == morava_degree(2, n));
}

TEST_CASE("odd primes give exterior algebras") {
  const std::vector<std::pair<long, int>> cases{{3, 1}, {3, 2}, {5, 2}};
  for (const auto& [p, n] : cases) {
    const MoravaScenario s = build_scenario(p, n);
    CHECK(s.F.is_regular());
    const AlgebraPresentation h = kn_homology(s);
    CHECK(h.kind == AlgebraPresentation::Kind::Exterior);
    for (int i = 0; i < n; ++i) CHECK(h.degrees[i] == 2 * (static_cast<int>(std::pow(p, i)) - 1) + 1);
    CHECK(kn_form(s).is_zero());
  }
  CHECK(kn_homology(build_scenario(3, 2)).text == "Λ(a0, a1)");
  CHECK(kn_homology(build_scenario(5, 2)).degrees == std::vector<int>{1, 9});
}

TEST_CASE("the prime 2") {
  CHECK(kn_homology(build_scenario(2, 1)).text == "T(a0)/(a0^2 − v1)");
  CHECK(kn_homology(build_scenario(2, 2)).text == "Λ(a0) ⊗ T(a1)/(a1^2 − v2)");
  CHECK(kn_homology(build_scenario(2, 3)).text == "Λ(a0, a1) ⊗ T(a2)/(a2^2 − v3)");
  for (int n = 1; n <= 3; ++n) {
    const MoravaScenario s = build_scenario(2, n);
    const BilinearForm b = kn_form(s);
    const RingElement vn = s.ring.generator(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == n - 1 && j == n - 1) {
          CHECK(b.entry(i, j) == vn);
        } else {
          CHECK(b.entry(i, j).is_zero());
        }
      }
    }
    CHECK(opposite_form(s.F, s.opposite_obstructions).ring_form == b);
    const CliffordAlgebra A = PairAlgebra(s.F, s.F.quotient()).algebra();
    const CliffordElement top = A.generator(static_cast<std::size_t>(n - 1));
    CHECK(top * top == A.scalar(vn));
  }
}

TEST_CASE("cohomology and scenario errors") {
  const AlgebraPresentation c = kn_cohomology(build_scenario(2, 1));
  CHECK(c.text == "Λ(Q0)");
  CHECK(c.degrees == std::vector<int>{-1});
  CHECK(kn_cohomology(build_scenario(3, 2)).degrees == std::vector<int>{-1, -5});
  CHECK_THROWS_WITH_AS(build_scenario(2, 2, 4), doctest::Contains("WindowTooSmall"), AlgebraError);
  CHECK_THROWS_AS(build_scenario(4, 1), AlgebraError);
  CHECK_THROWS_AS(build_scenario(2, 0), AlgebraError);
}

TEST_CASE("Tor ranks match the exterior algebra for Morava K-theories") {
  for (int n = 1; n <= 2; ++n) {
    const MoravaScenario s = build_scenario(2, n);
    CHECK(tor_matches_exterior_ranks(s.F, s.F.sequence(), s.ring.max_degree()));
  }
}

TEST_CASE("scenario rings, sequences and tokens") {
  const MoravaScenario k1_3 = build_scenario(3, 1);
  CHECK(k1_3.ring.describe() == "ZZ_(3)[v1^±1]");
  CHECK(k1_3.F.sequence() == std::vector<RingElement>{k1_3.ring.scalar(Scalar(3))});
  CHECK(k1_3.F.tokens()[0].commutative);

  const MoravaScenario k1_2 = build_scenario(2, 1);
  CHECK(k1_2.F.tokens()[0].obstruction == k1_2.ring.parse("v1"));

  const MoravaScenario k2_2 = build_scenario(2, 2);
  CHECK(k2_2.F.sequence()[1] == k2_2.ring.parse("v1"));
  CHECK(k2_2.F.tokens()[0].obstruction.is_zero());
  CHECK(k2_2.F.tokens()[1].obstruction == k2_2.ring.parse("v2"));
}
