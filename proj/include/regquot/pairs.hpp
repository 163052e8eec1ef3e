#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regquot/clifford.hpp"

namespace regquot {

// (F, k, pi) with pi: F_* -> k_* the canonical quotient map.
class AdmissiblePair {
 public:
  const QuotientRingSpec& F() const { return F_; }
  const QuotientRingSpec& k() const { return k_; }
  const QuotientMap& pi() const { return pi_; }
  bool multiplicative() const { return multiplicative_; }
  const PairAlgebra& homology() const { return homology_; }
  // k (x) b_F, the form of the homology algebra.
  const BilinearForm& form() const { return homology_.algebra().form(); }
  // pi^*(b_k), when k is regular and the pair is declared multiplicative.
  const std::optional<BilinearForm>& pulled_back_form() const { return pulled_back_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  friend AdmissiblePair make_pair(const QuotientRingSpec& F, const QuotientRingSpec& k, bool multiplicative);
  AdmissiblePair(QuotientRingSpec F, QuotientRingSpec k, QuotientMap pi, bool multiplicative, PairAlgebra homology)
      : F_(std::move(F)), k_(std::move(k)), pi_(std::move(pi)), multiplicative_(multiplicative),
        homology_(std::move(homology)) {}
  QuotientRingSpec F_;
  QuotientRingSpec k_;
  QuotientMap pi_;
  bool multiplicative_;
  PairAlgebra homology_;
  std::optional<BilinearForm> pulled_back_;
  std::vector<std::string> warnings_;
};

// NotUnital if k does not kill I.  A declared multiplicative flag is
// refuted (with a warning) when k (x) b_F and pi^*(b_k) differ.
AdmissiblePair make_pair(const QuotientRingSpec& F, const QuotientRingSpec& k, bool multiplicative);

// Same ring and sequence with the opposite products' obstructions.
QuotientRingSpec opposite(const QuotientRingSpec& F, const std::vector<RingElement>& opposite_obstructions);
// Homology of the mixed pair (F^op, F): the zero form over F_*.
PairAlgebra mixed_pair_algebra(const QuotientRingSpec& F);

// (F, k) -> (G, l) with I in J and ker(pi) in ker(pi').
struct PairMorphism {
  AdmissiblePair source;
  AdmissiblePair target;
};
PairMorphism make_morphism(AdmissiblePair source, AdmissiblePair target);

struct NaturalityReport {
  bool phi_square = false;
  bool base_change = false;
  bool multiplicative = false;
  std::vector<std::string> images;  // f(a_i)
  std::vector<std::string> failures;
  bool ok() const { return phi_square && base_change && multiplicative; }
};

NaturalityReport naturality_suite(const PairMorphism& m);

}  // namespace regquot
