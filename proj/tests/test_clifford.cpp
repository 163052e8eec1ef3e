#include <random>

#include "doctest.h"
#include "regquot/error.hpp"
#include "regquot/morava.hpp"
#include "support.hpp"

using namespace regquot;
using namespace testing_support;

namespace {

const std::vector<BaseRing> kBases{BaseRing::prime_field(2), BaseRing::prime_field(3), BaseRing::integers()};

CliffordAlgebra k1_algebra() {
  const Ring r = make_ring(BaseRing::localized(2), {{"v1", 2, true}}, 4, 2);
  const QuotientRingSpec F(r, {r.scalar(Scalar(2))}, {r.parse("v1")});
  return PairAlgebra(F, F.quotient()).algebra();
}

}  // namespace

TEST_CASE("exterior algebra products") {
  const Ring r = coefficient_ring(BaseRing::integers());
  const CliffordAlgebra A = CliffordAlgebra::exterior(plain(r), {1, 3});
  const CliffordElement a0 = A.generator(0), a1 = A.generator(1);
  CHECK((a0 * a0).is_zero());
  CHECK(a0 * a1 == -(a1 * a0));
  CHECK((a0 * a1) == A.word(0b11));
  CHECK(A.word_degree(0b11) == 4);
  CHECK(A.word_name(0b11) == "a0*a1");
  CHECK(A.word_name(0) == "1");
  CHECK(A.basis() == std::vector<Mask>{0, 1, 2, 3});
  CHECK((a1 * a0).str() == "-a0*a1");
  CHECK_THROWS_WITH_AS(A.generator(2), doctest::Contains("BadIndex"), AlgebraError);
  const CliffordAlgebra B = CliffordAlgebra::exterior(plain(r), {1, 3});
  CHECK_THROWS_WITH_AS(a0 * B.generator(0), doctest::Contains("MixedAlgebras"), AlgebraError);
}

TEST_CASE("the mod 2 Morava relation a0^2 = v1") {
  const CliffordAlgebra A = k1_algebra();
  const Ring& r = A.coefficients().ring();
  CHECK((A.generator(0) * A.generator(0)) == A.scalar(r.parse("v1")));
  CHECK((A.generator(0) * A.generator(0)).str() == "v1·1");
  const CliffordElement u = A.one() + A.generator(0).scaled(r.parse("v1"));
  CHECK(u.str() == "1 + v1·a0");
}

TEST_CASE("engine matches the rewriting oracle on random forms") {
  std::mt19937 rng(99);
  for (const auto& base : kBases) {
    const QuotientRing k = plain(coefficient_ring(base));
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 4; ++trial) {
        CHECK(engine_matches_oracle(random_diagonal_form(k, n, rng)));
        CHECK(engine_matches_oracle(random_form(k, n, rng)));
      }
    }
  }
}

TEST_CASE("oracle rejects a word bound that is too small") {
  const QuotientRing k = plain(coefficient_ring(BaseRing::integers()));
  std::mt19937 rng(1);
  const BilinearForm b = random_form(k, 3, rng);
  CHECK_THROWS_WITH_AS(brute_force_presentation(b, 2), doctest::Contains("BoundTooSmall"), AlgebraError);
  CHECK(brute_force_presentation(b, 6).basis.size() == 8);
}

TEST_CASE("Clifford relations, associativity and antipode") {
  std::mt19937 rng(17);
  for (const auto& base : kBases) {
    const QuotientRing k = plain(coefficient_ring(base));
    for (std::size_t n = 1; n <= 3; ++n) {
      const CliffordAlgebra A(random_form(k, n, rng));
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(A.generator(i) * A.generator(i) == A.scalar(A.q(i)));
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const CliffordElement ai = A.generator(i), aj = A.generator(j);
          CHECK(ai * aj + aj * ai == A.scalar(A.s(i, j)));
        }
      }
      for (int trial = 0; trial < 5; ++trial) {
        const CliffordElement u = random_element(A, rng), v = random_element(A, rng), w = random_element(A, rng);
        CHECK((u * v) * w == u * (v * w));
        CHECK(antipode(u * v) == antipode(u) * antipode(v));
        CHECK(antipode(antipode(u)) == u);
        CHECK(antipode(u + v) == antipode(u) + antipode(v));
      }
    }
  }
}

TEST_CASE("augmentation") {
  std::mt19937 rng(4);
  const QuotientRing k = plain(coefficient_ring(BaseRing::prime_field(3)));
  const CliffordAlgebra E = CliffordAlgebra::exterior(k, {1, 1, 3});
  for (int trial = 0; trial < 10; ++trial) {
    const CliffordElement u = random_element(E, rng), v = random_element(E, rng);
    CHECK(augmentation(u * v) == augmentation(u) * augmentation(v));
  }
  CHECK_THROWS_WITH_AS(augmentation(k1_algebra().one()), doctest::Contains("NotExterior"), AlgebraError);
}

TEST_CASE("presentations") {
  const Ring r = coefficient_ring(BaseRing::integers());
  const QuotientRing k = plain(r);
  const AlgebraPresentation ext = present(CliffordAlgebra::exterior(k, {1, 3}));
  CHECK(ext.kind == AlgebraPresentation::Kind::Exterior);
  CHECK(ext.text == "Λ(a0, a1)");
  CHECK(ext.relations == std::vector<std::string>{"a0*a1 + a1*a0 = 0", "a0^2 = 0", "a1^2 = 0"});
  CHECK(kind_name(ext.kind) == "exterior");

  const RingElement v = r.parse("v");
  const AlgebraPresentation diag = present(CliffordAlgebra(BilinearForm(k, {1, 1}, {{r.zero(), r.zero()}, {r.zero(), v}})));
  CHECK(diag.kind == AlgebraPresentation::Kind::TensorTruncated);
  CHECK(diag.text == "Λ(a0) ⊗ T(a1)/(a1^2 − v)");

  const AlgebraPresentation gen = present(CliffordAlgebra(BilinearForm(k, {1, 1}, {{r.zero(), v}, {r.zero(), r.zero()}})));
  CHECK(gen.kind == AlgebraPresentation::Kind::Clifford);
  CHECK(gen.text.rfind("Cl(a0, a1 | ", 0) == 0);
  CHECK(kind_name(gen.kind) == "clifford");
}

TEST_CASE("graded tensor products and the symmetry") {
  const QuotientRing k = plain(coefficient_ring(BaseRing::integers()));
  const CliffordAlgebra A = CliffordAlgebra::exterior(k, {1, 1});
  const CliffordElement a = A.generator(0), b = A.generator(1), one = A.one();
  CHECK(swap_factors(tensor(a, one)) == tensor(one, a));
  TensorElement expected(A, A);
  expected.add_term(2, 1, k.ring().scalar(Scalar(-1)));
  CHECK(swap_factors(tensor(a, b)) == expected);
  TensorElement sum = swap_factors(tensor(a, b));
  sum += tensor(b, a);
  CHECK(sum.is_zero());

  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const CliffordElement u = random_element(A, rng), v = random_element(A, rng);
    const TensorElement t = tensor(u, v);
    CHECK(swap_factors(swap_factors(t)) == t);
  }
  // (1 (x) a)(a (x) 1) = -(a (x) a) by the Koszul sign
  TensorElement neg(A, A);
  neg.add_term(1, 1, k.ring().scalar(Scalar(-1)));
  CHECK(tensor(one, a) * tensor(a, one) == neg);
  CHECK(tensor(a, one) * tensor(one, a) == tensor(a, a));
}

TEST_CASE("Kunneth isomorphism for orthogonal sums") {
  std::mt19937 rng(21);
  for (const auto& base : kBases) {
    const QuotientRing k = plain(coefficient_ring(base));
    const CliffordAlgebra A(random_form(k, 2, rng)), B(random_form(k, 1, rng));
    CHECK(kunneth_isomorphism_holds(A, B));
    const CliffordAlgebra S = orthogonal_sum(A, B);
    CHECK(S.rank() == 3);
    CHECK(kunneth_map(S.generator(2), A, B) == tensor(A.one(), B.generator(0)));
  }
}

TEST_CASE("pair algebras and induced maps") {
  const Ring z = make_ring(BaseRing::integers(), {}, 0, 0);
  const QuotientRingSpec F(z, {z.scalar(Scalar(27))});
  const PairAlgebra to3(F, QuotientRing(z, {z.scalar(Scalar(3))}));
  const PairAlgebra to9(F, QuotientRing(z, {z.scalar(Scalar(9))}));
  CHECK(to3.phi(z.scalar(Scalar(27))) == to3.algebra().generator(0));
  CHECK(to9.phi(z.scalar(Scalar(54))) == to9.algebra().generator(0).scaled(z.scalar(Scalar(2))));
  const AlgebraPresentation p = to3.presentation();
  CHECK(p.isomorphism_asserted);
  CHECK(p.text == "Λ(a0)");

  const QuotientRingSpec G(z, {z.scalar(Scalar(3))});
  const PairAlgebra G3(G, QuotientRing(z, {z.scalar(Scalar(3))}));
  const AlgebraMap f = induced_algebra_map(to3, G3);
  CHECK(f.images()[0].is_zero());
  CHECK(f.is_multiplicative());
  CHECK(f.respects_relations());
}

TEST_CASE("non-regular sequences give a lift only") {
  const Ring r = xy_ring(BaseRing::prime_field(2));
  const QuotientRingSpec F(r, {r.parse("x"), r.parse("x")});
  const PairAlgebra A(F, QuotientRing(r, {r.parse("x"), r.parse("y")}));
  const AlgebraPresentation p = A.presentation();
  CHECK_FALSE(p.isomorphism_asserted);
  CHECK(std::find(p.warnings.begin(), p.warnings.end(), kLiftOnly) != p.warnings.end());
}

TEST_CASE("rank four associativity and the size of the basis") {
  std::mt19937 rng(404);
  for (const auto& base : kBases) {
    const QuotientRing k = plain(coefficient_ring(base));
    const CliffordAlgebra A(random_form(k, 4, rng));
    CHECK(A.basis().size() == 16);
    for (int trial = 0; trial < 3; ++trial) {
      const CliffordElement u = random_element(A, rng), v = random_element(A, rng), w = random_element(A, rng);
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * (v + w) == u * v + u * w);
      CHECK((u + v) * w == u * w + v * w);
    }
    CHECK(engine_matches_oracle(random_form(k, 4, rng)));
  }
}

TEST_CASE("phi does not depend on the form") {
  const Ring r = make_ring(BaseRing::localized(2), {{"v1", 2, true}}, 4, 2);
  const QuotientRingSpec F(r, {r.scalar(Scalar(2))}, {r.parse("v1")});
  const PairAlgebra with_form(F, F.quotient());
  const PairAlgebra without(F, F.quotient(), BilinearForm::zero(F.quotient(), {1}));
  for (long m : {2L, 6L, -10L}) {
    const CliffordElement a = with_form.phi(r.scalar(Scalar(m))), b = without.phi(r.scalar(Scalar(m)));
    CHECK(a.terms() == b.terms());
  }
}

TEST_CASE("small products in K(1) at the prime 2") {
  const CliffordAlgebra A = k1_algebra();
  const Ring& r = A.coefficients().ring();
  const CliffordElement a = A.generator(0);
  // (1 + a0)(1 - a0) = 1 - v1 = (1 + v1) over F_2
  CHECK((A.one() + a) * (A.one() - a) == A.scalar(r.parse("1 + v1")));
  CHECK(((A.one() + a) * (A.one() - a)).str() == "(1 + v1)·1");
}

TEST_CASE("phi on sums and on squares of the ideal") {
  const Ring r = make_ring(BaseRing::localized(2), {{"v1", 2, true}}, 4, 2);
  const QuotientRingSpec F(r, {r.scalar(Scalar(2))}, {r.parse("v1")});
  const PairAlgebra P(F, F.quotient());
  const CliffordAlgebra& A = P.algebra();
  CHECK(P.phi(r.scalar(Scalar(2))) == A.generator(0));
  CHECK(P.phi(r.scalar(Scalar(4))).is_zero());
  CHECK(P.phi(r.parse("2 + 4*v1")) == A.generator(0));
  CHECK(P.phi(r.parse("2 + 2*v1")) == A.generator(0).scaled(r.parse("1 + v1")));
  CHECK(P.phi(r.parse("2 + 2*v1")).str() == "(1 + v1)·a0");

  const Ring xy = xy_ring(BaseRing::prime_field(3));
  const QuotientRingSpec G(xy, {xy.parse("x"), xy.parse("y")});
  const PairAlgebra Q(G, G.quotient());
  CHECK(Q.phi(xy.parse("x + x*y")) == Q.algebra().generator(0));
  CHECK(Q.phi(xy.parse("y")) == Q.algebra().generator(1));
}

TEST_CASE("diagonal forms anticommute distinct generators") {
  const MoravaScenario s = build_scenario(2, 2);
  const CliffordAlgebra A = PairAlgebra(s.F, s.F.quotient()).algebra();
  CHECK(A.generator(1) * A.generator(0) == -A.word(0b11));
}

TEST_CASE("rank zero and rank one algebras") {
  const QuotientRing k = plain(coefficient_ring(BaseRing::integers()));
  const CliffordAlgebra zero = CliffordAlgebra::exterior(k, {});
  CHECK(zero.basis() == std::vector<Mask>{0});
  CHECK(present(zero).generators.empty());
  const BruteForceResult empty = brute_force_presentation(BilinearForm::zero(k, {}), 0);
  CHECK(empty.basis == std::vector<Mask>{0});

  const RingElement v = k.ring().parse("v");
  const BruteForceResult one = brute_force_presentation(BilinearForm(k, {1}, {{v}}), 3);
  CHECK(one.basis == std::vector<Mask>{0, 1});
  CHECK(one.products.at({1, 1}) == std::map<Mask, RingElement>{{0, v}});
  const BruteForceResult ext = brute_force_presentation(BilinearForm::zero(k, {1, 1}), 5);
  CHECK(ext.basis.size() == 4);
  CHECK(ext.products.at({1, 1}).empty());
  CHECK(ext.products.at({2, 2}).empty());
  CHECK(ext.presentation.kind == AlgebraPresentation::Kind::Exterior);

  // R/x over any k: 1 and a_x
  const Ring xy = xy_ring(BaseRing::prime_field(3));
  const QuotientRingSpec F(xy, {xy.parse("x")});
  CHECK(PairAlgebra(F, QuotientRing(xy, {xy.parse("x"), xy.parse("y")})).algebra().basis().size() == 2);
}
