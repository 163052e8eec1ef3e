#include <random>

#include "doctest.h"
#include "regquot/derivations.hpp"
#include "regquot/error.hpp"
#include "support.hpp"

using namespace regquot;
using namespace testing_support;

namespace {

CliffordAlgebra exterior_of_rank(std::size_t n, BaseRing base = BaseRing::integers()) {
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) degrees.push_back(2 * static_cast<int>(i) + 1);
  return CliffordAlgebra::exterior(plain(coefficient_ring(base)), degrees);
}

}  // namespace

TEST_CASE("Bocksteins are derivations that square to zero and anticommute") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CliffordAlgebra A = exterior_of_rank(n);
    for (std::size_t i = 0; i < n; ++i) {
      const DerivationOperator Q = bockstein(A, i);
      CHECK(Q.degree() == -A.generator_degree(i));
      const LinearOperator op = Q.as_operator();
      CHECK(leibniz_check(op));
      CHECK(op.after(op).is_zero());
      for (std::size_t j = 0; j < n; ++j) {
        const LinearOperator other = bockstein(A, j).as_operator();
        CHECK((op.after(other) + other.after(op)).is_zero());
      }
    }
    CHECK(theta_relations_hold(A));
    CHECK(theta_injective(A));
    CHECK(psi_theta_square_commutes(A));
  }
}

TEST_CASE("Bockstein values by hand") {
  const CliffordAlgebra A = exterior_of_rank(2);
  const Ring& r = A.coefficients().ring();
  const LinearOperator Q0 = bockstein(A, 0).as_operator(), Q1 = bockstein(A, 1).as_operator();
  // Q1(a0 a1) = Q1(a0) a1 - a0 Q1(a1) = -a0
  CHECK(Q1(A.word(0b11)) == -A.generator(0));
  CHECK(Q0(A.word(0b11)) == A.generator(1));
  CHECK(Q0(A.generator(1)).is_zero());
  // eps Q0 Q1 (a0 a1) = -1, eps Q1 Q0 (a0 a1) = 1
  const DualFunctional d01 = Delta(A, std::vector<std::size_t>{0, 1});
  const DualFunctional d10 = Delta(A, std::vector<std::size_t>{1, 0});
  CHECK(d01[0b11] == r.scalar(Scalar(-1)));
  CHECK(d10[0b11] == r.one());
  CHECK(d01[0b01].is_zero());
  CHECK(Psi(theta(A, {0, 1}).op) == d01);
  CHECK(Delta(A, std::vector<std::size_t>{})[0] == r.one());
}

TEST_CASE("psi is inverse to psi_inverse and derivations satisfy Leibniz") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coef(-3, 3);
  // equal generator degrees so that every functional is homogeneous
  const CliffordAlgebra A = CliffordAlgebra::exterior(plain(coefficient_ring(BaseRing::integers())), {1, 1, 1});
  const Ring& r = A.coefficients().ring();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RingElement> alpha;
    for (int i = 0; i < 3; ++i) alpha.push_back(r.scalar(Scalar(coef(rng))));
    const DerivationOperator theta_op = psi_inverse(A, alpha, -1);
    CHECK(psi(theta_op) == alpha);
    const LinearOperator op = theta_op.as_operator();
    CHECK(leibniz_check(op));
    std::vector<std::pair<CliffordElement, CliffordElement>> samples;
    for (int s = 0; s < 5; ++s) samples.emplace_back(random_element(A, rng), random_element(A, rng));
    CHECK(leibniz_check(op, samples));
    CHECK(op.after(op).is_zero());
  }
}

TEST_CASE("the Delta of a wedge is multilinear") {
  const CliffordAlgebra A = exterior_of_rank(2);
  const Ring& r = A.coefficients().ring();
  const RingElement one = r.one(), zero = r.zero(), two = r.scalar(Scalar(2));
  // (y0 + 2 y1) ^ y1 = y0 ^ y1
  const DualFunctional lhs = Delta(A, std::vector<std::vector<RingElement>>{{one, two}, {zero, one}});
  CHECK(lhs == Delta(A, std::vector<std::size_t>{0, 1}));
}

TEST_CASE("derivation errors and the cohomology presentation") {
  const CliffordAlgebra A = exterior_of_rank(2);
  const Ring& r = A.coefficients().ring();
  CHECK_THROWS_AS(DerivationOperator(A, 2, {r.one(), r.zero()}), AlgebraError);
  CHECK_THROWS_AS(bockstein(A, 5), AlgebraError);

  const Ring xy = xy_ring(BaseRing::prime_field(2));
  const AlgebraPresentation p = cohomology_presentation(QuotientRingSpec(xy, {xy.parse("x"), xy.parse("y")}));
  CHECK(p.text == "Λ(Q0, Q1)");
  CHECK(p.degrees == std::vector<int>{-3, -3});
  CHECK_THROWS_WITH_AS(cohomology_presentation(QuotientRingSpec(xy, {xy.parse("x"), xy.parse("x")})),
                       doctest::Contains("NotRegular"), AlgebraError);
}

TEST_CASE("a derivation is determined by its functional and splits into Bocksteins") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> coef(-3, 3);
  const CliffordAlgebra A = CliffordAlgebra::exterior(plain(coefficient_ring(BaseRing::prime_field(3))), {1, 1, 3});
  const Ring& r = A.coefficients().ring();
  for (int trial = 0; trial < 10; ++trial) {
    // degree -1: only the degree-1 generators can carry scalars; a2 needs a v
    const std::vector<RingElement> alpha{r.scalar(Scalar(coef(rng))), r.scalar(Scalar(coef(rng))),
                                         r.parse("v").scaled(Scalar(coef(rng)))};
    const DerivationOperator theta_op = psi_inverse(A, alpha, -1);
    CHECK(theta_op.degree() == -1);
    const LinearOperator op = theta_op.as_operator();
    for (std::size_t j = 0; j < 3; ++j) CHECK(op(A.generator(j)) == A.scalar(psi(theta_op)[j]));
    for (Mask w : A.basis()) {
      CliffordElement sum = A.zero();
      for (std::size_t i = 0; i < 3; ++i) sum += bockstein(A, i).as_operator()(A.word(w)).scaled(alpha[i]);
      CHECK(op(A.word(w)) == sum);
    }
  }
  CHECK_THROWS_AS(psi_inverse(A, {r.one(), r.one(), r.one()}, -1), AlgebraError);
}

TEST_CASE("compositions of Bocksteins are not derivations") {
  const CliffordAlgebra A = exterior_of_rank(2);
  const LinearOperator Q0 = bockstein(A, 0).as_operator(), Q1 = bockstein(A, 1).as_operator();
  CHECK(leibniz_check(Q0));
  CHECK_FALSE(leibniz_check(Q0.after(Q1), {{A.generator(0), A.generator(1)}}));
  CHECK(leibniz_check(LinearOperator::zero(A, -1)));
}

TEST_CASE("the empty word, Kronecker duals and rank zero") {
  const CliffordAlgebra A = exterior_of_rank(2);
  const Ring& r = A.coefficients().ring();
  CHECK(theta(A, {}).op == LinearOperator::identity(A));
  const DualFunctional eps = kronecker_dual(A, [&](Mask w) { return w == 0 ? r.one() : r.zero(); });
  CHECK(eps == Psi(LinearOperator::identity(A)));
  const DualFunctional y0 = Psi(bockstein(A, 0).as_operator());
  for (Mask w : A.basis()) CHECK(y0[w] == (w == 0b01 ? r.one() : r.zero()));

  const CliffordAlgebra E = CliffordAlgebra::exterior(A.coefficients(), {});
  CHECK(Psi(LinearOperator::identity(E)).size() == 1);
  CHECK(theta_injective(E));

  const Ring xy = xy_ring(BaseRing::prime_field(2));
  const AlgebraPresentation single = cohomology_presentation(QuotientRingSpec(xy, {xy.parse("x")}));
  CHECK(single.text == "Λ(Q0)");
  CHECK(single.degrees == std::vector<int>{-3});
}
