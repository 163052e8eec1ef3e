#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regquot/ideal.hpp"
#include "regquot/quotient.hpp"
#include "regquot/ring.hpp"

namespace regquot {

// A product on R/x_i, known only through its commutativity obstruction
// c in R/x_i, homogeneous of degree 2|x_i|+2.
struct ProductToken {
  RingElement obstruction;
  bool commutative = true;
};

// F = R/(x_1..x_n) with one product token per generator.  Regularity is
// checked up to the ring window at construction and recorded; a
// non-regular sequence is accepted so that callers can still build the
// (lift-only) algebra.
class QuotientRingSpec {
 public:
  // Missing obstructions default to zero (commutative products).
  QuotientRingSpec(Ring ring, std::vector<RingElement> sequence, std::vector<RingElement> obstructions = {});

  const Ring& ring() const { return quotient_.ring(); }
  const std::vector<RingElement>& sequence() const { return sequence_; }
  const std::vector<ProductToken>& tokens() const { return tokens_; }
  std::size_t length() const { return sequence_.size(); }
  // F_* = R_*/I.
  const QuotientRing& quotient() const { return quotient_; }
  const RegularityReport& regularity() const { return regularity_; }
  bool is_regular() const { return regularity_.regular; }
  // |x_i|
  int sequence_degree(std::size_t i) const;

  // Same ring and sequence, new tokens.
  QuotientRingSpec with_obstructions(std::vector<RingElement> obstructions) const;

 private:
  std::vector<RingElement> sequence_;
  std::vector<ProductToken> tokens_;
  QuotientRing quotient_;
  RegularityReport regularity_;
};

// I/I^2[1] with basis xbar_i in degree |x_i|+1, coefficients in a
// quotient k_* of R_* whose ideal contains I.
class ConormalModule {
 public:
  ConormalModule(QuotientRingSpec parent, QuotientRing coefficients);

  const QuotientRingSpec& parent() const { return parent_; }
  const QuotientRing& coefficients() const { return coefficients_; }
  std::size_t rank() const { return parent_.length(); }
  int degree(std::size_t i) const { return parent_.sequence_degree(i) + 1; }
  std::vector<int> degrees() const;

  // Coordinates of the class of x in I/I^2, pushed into the coefficient
  // ring.  Throws NotInIdeal if x is not in I.
  std::vector<RingElement> coordinates(const RingElement& x) const;

 private:
  static std::optional<RingElement> ring_product(const RingElement& a, const RingElement& b);

  QuotientRingSpec parent_;
  QuotientRing coefficients_;
  std::vector<RingElement> square_generators_;
};

// Over F_* itself; throws NotRegular when the sequence is not regular.
ConormalModule conormal_module(const QuotientRingSpec& F);

// Bilinear form on a free module with odd generator degrees, entries in
// a quotient ring.
class BilinearForm {
 public:
  BilinearForm(QuotientRing coefficients, std::vector<int> degrees, std::vector<std::vector<RingElement>> entries);
  static BilinearForm zero(QuotientRing coefficients, std::vector<int> degrees);

  const QuotientRing& coefficients() const { return coefficients_; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  const RingElement& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<RingElement>>& entries() const { return entries_; }
  RingElement q(std::size_t i) const { return entries_[i][i]; }
  // b_ij + b_ji
  RingElement polarized(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  bool is_diagonal() const;
  bool operator==(const BilinearForm& other) const;

  // Rows of entry strings, for reports.
  std::vector<std::vector<std::string>> table() const;

 private:
  QuotientRing coefficients_;
  std::vector<int> degrees_;
  std::vector<std::vector<RingElement>> entries_;
};

// b_ii = -c(mu_i) mod I, zero off the diagonal.
BilinearForm characteristic_form_diagonal(const QuotientRingSpec& F);

// Entries pushed along a quotient map; pi's source must carry b's
// coefficients.
BilinearForm base_change_form(const BilinearForm& b, const QuotientMap& pi);

struct OppositeForms {
  BilinearForm ring_form;   // b of F^op, from the supplied obstructions
  BilinearForm mixed_form;  // b^F_{F^op}, always zero
};
OppositeForms opposite_form(const QuotientRingSpec& F, const std::vector<RingElement>& opposite_obstructions);

}  // namespace regquot
