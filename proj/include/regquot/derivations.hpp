#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "regquot/clifford.hpp"

namespace regquot {

// Linear endo-operator of a Clifford algebra of fixed degree, stored as
// the images of the 2^n basis words (column w is the image of word w).
class LinearOperator {
 public:
  LinearOperator(CliffordAlgebra algebra, int degree, std::vector<CliffordElement> columns);
  static LinearOperator identity(const CliffordAlgebra& algebra);
  static LinearOperator zero(const CliffordAlgebra& algebra, int degree);

  const CliffordAlgebra& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const std::vector<CliffordElement>& columns() const { return columns_; }
  CliffordElement operator()(const CliffordElement& u) const;

  // (*this) o other
  LinearOperator after(const LinearOperator& other) const;
  LinearOperator operator+(const LinearOperator& other) const;
  bool operator==(const LinearOperator& other) const { return algebra_.same(other.algebra_) && columns_ == other.columns_; }
  bool is_zero() const;

 private:
  CliffordAlgebra algebra_;
  int degree_;
  std::vector<CliffordElement> columns_;
};

// Odd derivation of an exterior algebra, determined by theta(a_i) = c_i * 1.
class DerivationOperator {
 public:
  DerivationOperator(CliffordAlgebra algebra, int degree, std::vector<RingElement> generator_images);

  const CliffordAlgebra& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const std::vector<RingElement>& generator_images() const { return images_; }
  // Graded Leibniz extension to all words.
  LinearOperator as_operator() const;

 private:
  CliffordAlgebra algebra_;
  int degree_;
  std::vector<RingElement> images_;
};

// d/da_i, of degree -|a_i|.
DerivationOperator bockstein(const CliffordAlgebra& exterior, std::size_t i);

// psi(theta): the functional xbar_j -> eps(theta(a_j)) on V.
std::vector<RingElement> psi(const DerivationOperator& theta);
DerivationOperator psi_inverse(const CliffordAlgebra& exterior, const std::vector<RingElement>& alpha, int degree);

// op(ab) == op(a) b + (-1)^{|op||a|} a op(b) on every sample pair.
bool leibniz_check(const LinearOperator& op, const std::vector<std::pair<CliffordElement, CliffordElement>>& samples);
// Exhaustive on pairs of basis words.
bool leibniz_check(const LinearOperator& op);

struct CohomologyOperator {
  LinearOperator op;
  std::vector<std::size_t> word;  // Bockstein indices, outermost first
};

// ops[0] o ops[1] o ...; the empty list gives the identity.
CohomologyOperator compose(const CliffordAlgebra& exterior, const std::vector<DerivationOperator>& ops);
// Theta(Q_{i1} ^ ... ^ Q_{ik}) = Q_{i1} o ... o Q_{ik}
CohomologyOperator theta(const CliffordAlgebra& exterior, const std::vector<std::size_t>& word);

// Functional on the 2^n basis words, indexed by mask.
using DualFunctional = std::vector<RingElement>;

// eps o op
DualFunctional Psi(const LinearOperator& op);
// eps o d/dxbar_{i1} o ... o d/dxbar_{ik}, from the closed formula on words.
DualFunctional Delta(const CliffordAlgebra& exterior, const std::vector<std::size_t>& word);
// Multilinear extension to a wedge of functionals on V.
DualFunctional Delta(const CliffordAlgebra& exterior, const std::vector<std::vector<RingElement>>& wedge);
DualFunctional kronecker_dual(const CliffordAlgebra& algebra, const std::function<RingElement(Mask)>& f);

// Q_i^2 = 0 and Q_i Q_j + Q_j Q_i = 0 as matrices.
bool theta_relations_hold(const CliffordAlgebra& exterior);
// eps(Theta(Q_S)(a_T)) is a signed permutation matrix, so the 2^n
// operators Theta(Q_S) are a basis of a free module.
bool theta_injective(const CliffordAlgebra& exterior);
// Psi o Theta == Delta o Lambda(psi) on every basis word.
bool psi_theta_square_commutes(const CliffordAlgebra& exterior);

// Lambda(Q_0, ..., Q_{n-1}) with |Q_i| = -(|x_i| + 1).  NotRegular if F
// is not regular.
AlgebraPresentation cohomology_presentation(const QuotientRingSpec& F);

}  // namespace regquot
