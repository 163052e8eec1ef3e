#include "regquot/pairs.hpp"

#include "regquot/error.hpp"

namespace regquot {

namespace {

// pi^*(b_k)_ij = sum_lm r_il r_jm (b_k)_lm with x_i = sum_l r_il z_l mod K^2.
BilinearForm pull_back(const QuotientRingSpec& F, const QuotientRingSpec& k) {
  const ConormalModule target(k, k.quotient());
  const BilinearForm bk = characteristic_form_diagonal(k);
  const QuotientRing& coeffs = k.quotient();
  std::vector<std::vector<RingElement>> r;
  for (const auto& x : F.sequence()) r.push_back(target.coordinates(x));
  const std::size_t n = F.length(), m = k.length();
  std::vector<std::vector<RingElement>> entries(n, std::vector<RingElement>(n, coeffs.zero()));
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    degrees.push_back(F.sequence_degree(i) + 1);
    for (std::size_t j = 0; j < n; ++j) {
      RingElement e = coeffs.zero();
      for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t t = 0; t < m; ++t) e += r[i][l] * r[j][t] * bk.entry(l, t);
      }
      entries[i][j] = coeffs.reduce(e);
    }
  }
  return BilinearForm(coeffs, std::move(degrees), std::move(entries));
}

}  // namespace

AdmissiblePair make_pair(const QuotientRingSpec& F, const QuotientRingSpec& k, bool multiplicative) {
  if (!F.ring().same(k.ring())) fail(ErrorKind::MixedRings, "pair over different rings");
  for (const auto& x : F.sequence()) {
    if (!k.quotient().contains(x)) {
      fail(ErrorKind::NotUnital, "pi does not kill " + x.str() + " in " + k.quotient().describe());
    }
  }
  QuotientMap pi(F.quotient(), k.quotient());
  PairAlgebra homology(F, k.quotient());
  AdmissiblePair out(F, k, std::move(pi), multiplicative, std::move(homology));
  if (multiplicative && k.is_regular()) {
    out.pulled_back_ = pull_back(F, k);
    if (!(*out.pulled_back_ == out.form())) {
      out.warnings_.push_back("multiplicative flag refuted: k (x) b_F differs from pi^*(b_k)");
    }
  }
  return out;
}

QuotientRingSpec opposite(const QuotientRingSpec& F, const std::vector<RingElement>& opposite_obstructions) {
  return F.with_obstructions(opposite_obstructions);
}

PairAlgebra mixed_pair_algebra(const QuotientRingSpec& F) {
  std::vector<int> degrees;
  for (std::size_t i = 0; i < F.length(); ++i) degrees.push_back(F.sequence_degree(i) + 1);
  return PairAlgebra(F, F.quotient(), BilinearForm::zero(F.quotient(), std::move(degrees)));
}

PairMorphism make_morphism(AdmissiblePair source, AdmissiblePair target) {
  if (!source.F().ring().same(target.F().ring())) fail(ErrorKind::MixedRings, "morphism between different rings");
  if (!source.F().quotient().ideal_contained_in(target.F().quotient())) {
    fail(ErrorKind::NotWellDefined, "source ideal is not contained in the target ideal");
  }
  if (!source.k().quotient().ideal_contained_in(target.k().quotient())) {
    fail(ErrorKind::NotWellDefined, "coefficient map k -> l is not well defined");
  }
  return {std::move(source), std::move(target)};
}

NaturalityReport naturality_suite(const PairMorphism& m) {
  NaturalityReport report;
  const PairAlgebra& src = m.source.homology();
  const PairAlgebra& tgt = m.target.homology();
  const AlgebraMap f = induced_algebra_map(src, tgt);
  for (const auto& img : f.images()) report.images.push_back(img.str());

  // (a) phi_G o (I/I^2 -> J/J^2) == f o phi_F on generators and their
  // multiples by ring generators.
  const Ring& ring = m.source.F().ring();
  std::vector<RingElement> samples;
  RingElement total = ring.zero();
  for (const auto& x : m.source.F().sequence()) {
    samples.push_back(x);
    total += x;
    for (std::size_t g = 0; g < ring.num_generators(); ++g) {
      auto prod = ring.raw_product(ring.generator(g).terms(), x.terms());
      if (prod && !prod->empty()) samples.push_back(ring.element(std::move(*prod)));
    }
  }
  if (!total.is_zero()) samples.push_back(total);
  report.phi_square = true;
  for (const auto& x : samples) {
    if (!(tgt.phi(x) == f(src.phi(x)))) {
      report.phi_square = false;
      report.failures.push_back("phi square fails on " + x.str());
    }
  }

  // (b) base change F -> k -> l equals F -> l.
  const BilinearForm bF = characteristic_form_diagonal(m.source.F());
  const QuotientMap k_to_l(m.source.k().quotient(), m.target.k().quotient());
  const BilinearForm two_step = base_change_form(base_change_form(bF, m.source.pi()), k_to_l);
  const BilinearForm one_step = base_change_form(bF, QuotientMap(m.source.F().quotient(), m.target.k().quotient()));
  report.base_change = two_step == one_step;
  if (!report.base_change) report.failures.push_back("base change is not functorial");

  // (c)
  report.multiplicative = f.is_multiplicative();
  if (!report.multiplicative) report.failures.push_back("induced map is not multiplicative");
  return report;
}

}  // namespace regquot
