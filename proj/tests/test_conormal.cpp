#include "doctest.h"
#include "regquot/error.hpp"
#include "support.hpp"

using namespace regquot;
using namespace testing_support;

namespace {

Ring k1_ring() { return make_ring(BaseRing::localized(2), {{"v1", 2, true}}, 4, 2); }

}  // namespace

TEST_CASE("quotient ring specs record regularity") {
  const Ring r = xy_ring(BaseRing::prime_field(2));
  const QuotientRingSpec F(r, {r.parse("x"), r.parse("y")});
  CHECK(F.is_regular());
  CHECK(F.length() == 2);
  CHECK(F.sequence_degree(1) == 2);
  CHECK(F.quotient().component_invariants(0) == ModuleInvariants{1, {}});
  CHECK(F.quotient().component_invariants(2).is_zero());
  CHECK(F.tokens()[0].commutative);

  const QuotientRingSpec bad(r, {r.parse("x"), r.parse("x")});
  CHECK_FALSE(bad.is_regular());
  CHECK_THROWS_WITH_AS(conormal_module(bad), doctest::Contains("NotRegular"), AlgebraError);
  CHECK_THROWS_WITH_AS(QuotientRingSpec(r, {r.parse("x")}, {r.parse("x")}), doctest::Contains("DegreeMismatch"),
                       AlgebraError);
  CHECK(QuotientRingSpec(r, {}).is_regular());
}

TEST_CASE("obstructions are reduced and give the characteristic form") {
  const Ring r = k1_ring();
  const QuotientRingSpec F(r, {r.scalar(Scalar(2))}, {r.parse("3*v1")});
  CHECK(F.tokens()[0].obstruction == r.parse("v1"));
  CHECK_FALSE(F.tokens()[0].commutative);
  const BilinearForm b = characteristic_form_diagonal(F);
  CHECK(b.rank() == 1);
  CHECK(b.degrees() == std::vector<int>{1});
  CHECK(b.q(0) == r.parse("v1"));
  CHECK(b.is_diagonal());
  CHECK_FALSE(b.is_zero());
  CHECK(characteristic_form_diagonal(F.with_obstructions({})).is_zero());
}

TEST_CASE("conormal coordinates") {
  const Ring r = xy_ring(BaseRing::prime_field(2));
  const QuotientRingSpec F(r, {r.parse("x"), r.parse("y^2")});
  const ConormalModule M = conormal_module(F);
  CHECK(M.degrees() == std::vector<int>{3, 5});
  const auto c = M.coordinates(r.parse("x*y + y^2"));
  CHECK(c[0] == r.parse("y"));
  CHECK(c[1] == r.one());
  for (const auto& e : M.coordinates(r.parse("x^2"))) CHECK(e.is_zero());
  // inhomogeneous input is split by degree
  const auto mixed = M.coordinates(r.parse("x + y^2"));
  CHECK(mixed[0] == r.one());
  CHECK(mixed[1] == r.one());
  CHECK_THROWS_WITH_AS(M.coordinates(r.parse("y")), doctest::Contains("NotInIdeal"), AlgebraError);

  // coefficients in F_2 = R/(x, y)
  const ConormalModule over_k(F, QuotientRing(r, {r.parse("x"), r.parse("y")}));
  CHECK(over_k.coordinates(r.parse("x*y + y^2"))[0].is_zero());
  CHECK_THROWS_WITH_AS(ConormalModule(F, QuotientRing(r, {r.parse("x")})), doctest::Contains("NotWellDefined"),
                       AlgebraError);
}

TEST_CASE("integer conormal module of p^k") {
  const Ring z = make_ring(BaseRing::integers(), {}, 0, 0);
  const QuotientRingSpec F(z, {z.scalar(Scalar(27))});
  const ConormalModule M(F, QuotientRing(z, {z.scalar(Scalar(3))}));
  CHECK(M.coordinates(z.scalar(Scalar(54)))[0] == z.scalar(Scalar(2)));
  CHECK(M.coordinates(z.scalar(Scalar(81)))[0].is_zero());
}

TEST_CASE("bilinear forms") {
  const Ring r = coefficient_ring(BaseRing::integers());
  const QuotientRing k = plain(r);
  const RingElement v = r.parse("v");
  const BilinearForm b(k, {1, 1}, {{v, v.scaled(2)}, {r.zero(), r.zero()}});
  CHECK(b.polarized(0, 1) == v.scaled(2));
  CHECK(b.polarized(0, 0) == v.scaled(2));
  CHECK_FALSE(b.is_diagonal());
  CHECK(b.table()[0][1] == "2*v");
  CHECK(BilinearForm::zero(k, {1, 3}).is_zero());
  CHECK_THROWS_AS(BilinearForm(k, {2}, {{r.zero()}}), AlgebraError);
  CHECK_THROWS_AS(BilinearForm(k, {1}, {{r.one()}}), AlgebraError);

  const QuotientRing k2(r, {r.scalar(Scalar(2))});
  const BilinearForm pushed = base_change_form(b, QuotientMap(k, k2));
  CHECK(pushed.entry(0, 1).is_zero());
  CHECK(pushed.q(0) == v);
}

TEST_CASE("opposite forms") {
  const Ring r = k1_ring();
  const QuotientRingSpec F(r, {r.scalar(Scalar(2))}, {r.parse("v1")});
  const OppositeForms forms = opposite_form(F, {r.parse("v1")});
  CHECK(forms.ring_form == characteristic_form_diagonal(F));
  CHECK(forms.mixed_form.is_zero());
}

TEST_CASE("base change of forms is functorial") {
  const Ring r = coefficient_ring(BaseRing::integers());
  const QuotientRing k = plain(r), k4(r, {r.scalar(Scalar(4))}), k2(r, {r.scalar(Scalar(2))});
  const RingElement v = r.parse("v");
  const BilinearForm b(k, {1, 1}, {{v.scaled(3), v.scaled(6)}, {v.scaled(-1), v.scaled(5)}});
  const QuotientMap first(k, k4), second(k4, k2);
  CHECK(base_change_form(base_change_form(b, first), second) == base_change_form(b, first.then(second)));
  CHECK(base_change_form(b, QuotientMap(k, k2)) == base_change_form(b, first.then(second)));
}

TEST_CASE("every stored form entry has the degree of its position") {
  const Ring r = make_ring(BaseRing::integers(), {{"v", 6, false}, {"x", 2, false}, {"y", 2, false}}, 12, 0);
  const QuotientRingSpec F(r, {r.parse("x"), r.parse("y")}, {r.parse("v"), r.parse("2*v + y^3")});
  const BilinearForm b = characteristic_form_diagonal(F);
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) {
      if (!b.entry(i, j).is_zero()) CHECK(*b.entry(i, j).degree() == b.degrees()[i] + b.degrees()[j]);
    }
  }
  CHECK_THROWS_WITH_AS(BilinearForm(F.quotient(), {1, 1}, {{r.parse("v"), r.zero()}, {r.zero(), r.zero()}}),
                       doctest::Contains("DegreeMismatch"), AlgebraError);
}

TEST_CASE("the characteristic form is equivariant under reordering the sequence") {
  const Ring r = make_ring(BaseRing::integers(), {{"v", 6, false}, {"x", 2, false}, {"y", 2, false}}, 12, 0);
  const RingElement c1 = r.parse("v"), c2 = r.parse("2*v + y^3");
  const BilinearForm b = characteristic_form_diagonal(QuotientRingSpec(r, {r.parse("x"), r.parse("y")}, {c1, c2}));
  const BilinearForm swapped =
      characteristic_form_diagonal(QuotientRingSpec(r, {r.parse("y"), r.parse("x")}, {c2, c1}));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(b.entry(i, j) == swapped.entry(1 - i, 1 - j));
  }
  CHECK(b.q(0) == r.parse("-v"));
  CHECK(b.q(1) == r.parse("-2*v"));
}

TEST_CASE("ranks and degrees of conormal modules") {
  const Ring z = make_ring(BaseRing::integers(), {}, 0, 0);
  const QuotientRingSpec F(z, {z.scalar(Scalar(81))});
  const ConormalModule M = conormal_module(F);
  CHECK(M.rank() == 1);
  CHECK(M.degrees() == std::vector<int>{1});
  CHECK(M.coordinates(z.scalar(Scalar(81 * 5)))[0] == z.scalar(Scalar(5)));
  CHECK(F.quotient().component_invariants(0) == ModuleInvariants{0, {Scalar(81)}});

  const Ring k1 = make_ring(BaseRing::localized(2), {{"v1", 2, true}}, 4, 2);
  CHECK(conormal_module(QuotientRingSpec(k1, {k1.scalar(Scalar(2))})).degrees() == std::vector<int>{1});
  CHECK(conormal_module(QuotientRingSpec(k1, {})).rank() == 0);
}

TEST_CASE("base change of characteristic forms") {
  const Ring z = make_ring(BaseRing::integers(), {}, 0, 0);
  const QuotientRingSpec F(z, {z.scalar(Scalar(16))});
  const BilinearForm b = characteristic_form_diagonal(F);
  CHECK(b.is_zero());
  CHECK(base_change_form(b, QuotientMap(F.quotient(), QuotientRing(z, {z.scalar(Scalar(2))}))).is_zero());

  const Ring k1 = make_ring(BaseRing::localized(2), {{"v1", 2, true}}, 4, 2);
  const QuotientRingSpec K(k1, {k1.scalar(Scalar(2))}, {k1.parse("v1")});
  const BilinearForm bk = characteristic_form_diagonal(K);
  CHECK(base_change_form(bk, QuotientMap(K.quotient(), K.quotient())) == bk);

  // an obstruction w that only agrees with v1 modulo the target ideal
  const Ring rw = make_ring(BaseRing::localized(2), {{"v1", 2, true}, {"w", 2, false}}, 4, 2);
  const QuotientRingSpec G(rw, {rw.scalar(Scalar(2))}, {rw.parse("w")});
  const QuotientRing target(rw, {rw.scalar(Scalar(2)), rw.parse("w - v1")});
  const BilinearForm pushed = base_change_form(characteristic_form_diagonal(G), QuotientMap(G.quotient(), target));
  CHECK(pushed.q(0) == target.reduce(rw.parse("v1")));
}
