#include "regquot/derivations.hpp"

#include <bit>

#include "regquot/error.hpp"

namespace regquot {

namespace {

void require_exterior(const CliffordAlgebra& a) {
  if (!a.is_exterior()) fail(ErrorKind::NotExterior, "operation needs an exterior algebra");
}

bool odd_word(Mask w) { return std::popcount(w) % 2 == 1; }

bool is_unit_sign(const RingElement& c, const QuotientRing& k) { return c == k.one() || c == k.reduce(-k.one()); }

}  // namespace

LinearOperator::LinearOperator(CliffordAlgebra algebra, int degree, std::vector<CliffordElement> columns)
    : algebra_(std::move(algebra)), degree_(degree), columns_(std::move(columns)) {
  if (columns_.size() != (std::size_t{1} << algebra_.rank())) {
    fail(ErrorKind::InvalidArgument, "operator needs one column per basis word");
  }
  for (const auto& c : columns_) {
    if (!c.algebra().same(algebra_)) fail(ErrorKind::MixedOwners, "operator column in a different algebra");
  }
}

LinearOperator LinearOperator::identity(const CliffordAlgebra& algebra) {
  std::vector<CliffordElement> cols;
  for (Mask w : algebra.basis()) cols.push_back(algebra.word(w));
  return LinearOperator(algebra, 0, std::move(cols));
}

LinearOperator LinearOperator::zero(const CliffordAlgebra& algebra, int degree) {
  return LinearOperator(algebra, degree, std::vector<CliffordElement>(std::size_t{1} << algebra.rank(), algebra.zero()));
}

CliffordElement LinearOperator::operator()(const CliffordElement& u) const {
  if (!u.algebra().same(algebra_)) fail(ErrorKind::MixedOwners, "element outside the operator's algebra");
  CliffordElement out = algebra_.zero();
  for (const auto& [w, c] : u.terms()) out += columns_[w].scaled(c);
  return out;
}

LinearOperator LinearOperator::after(const LinearOperator& other) const {
  if (!algebra_.same(other.algebra_)) fail(ErrorKind::MixedOwners, "composing operators on different algebras");
  std::vector<CliffordElement> cols;
  for (const auto& c : other.columns_) cols.push_back((*this)(c));
  return LinearOperator(algebra_, degree_ + other.degree_, std::move(cols));
}

LinearOperator LinearOperator::operator+(const LinearOperator& other) const {
  if (!algebra_.same(other.algebra_)) fail(ErrorKind::MixedOwners, "adding operators on different algebras");
  std::vector<CliffordElement> cols;
  for (std::size_t i = 0; i < columns_.size(); ++i) cols.push_back(columns_[i] + other.columns_[i]);
  return LinearOperator(algebra_, degree_, std::move(cols));
}

bool LinearOperator::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

DerivationOperator::DerivationOperator(CliffordAlgebra algebra, int degree, std::vector<RingElement> generator_images)
    : algebra_(std::move(algebra)), degree_(degree), images_(std::move(generator_images)) {
  require_exterior(algebra_);
  if (degree_ % 2 == 0) fail(ErrorKind::DegreeMismatch, "derivations here have odd degree");
  if (images_.size() != algebra_.rank()) fail(ErrorKind::InvalidArgument, "need one image per generator");
  const QuotientRing& k = algebra_.coefficients();
  for (std::size_t i = 0; i < images_.size(); ++i) {
    images_[i] = k.reduce(images_[i]);
    if (images_[i].is_zero()) continue;
    const int expected = algebra_.generator_degree(i) + degree_;
    if (images_[i].degree() != expected) {
      fail(ErrorKind::DegreeMismatch, "image of generator " + std::to_string(i) + " must have degree " +
                                          std::to_string(expected));
    }
  }
}

LinearOperator DerivationOperator::as_operator() const {
  std::vector<CliffordElement> cols;
  for (Mask w : algebra_.basis()) {
    // theta(a_{s1} ... a_{sk}) = sum_j (-1)^{j-1} a_{s1} ... theta(a_{sj}) ... a_{sk}
    CliffordElement out = algebra_.zero();
    int position = 0;
    for (std::size_t i = 0; i < algebra_.rank(); ++i) {
      const Mask bit = Mask{1} << i;
      if (!(w & bit)) continue;
      if (!images_[i].is_zero()) {
        const RingElement c = position % 2 == 0 ? images_[i] : -images_[i];
        out += algebra_.word(w & ~bit, c);
      }
      ++position;
    }
    cols.push_back(std::move(out));
  }
  return LinearOperator(algebra_, degree_, std::move(cols));
}

DerivationOperator bockstein(const CliffordAlgebra& exterior, std::size_t i) {
  if (i >= exterior.rank()) fail(ErrorKind::BadIndex, "Bockstein index " + std::to_string(i) + " out of range");
  const QuotientRing& k = exterior.coefficients();
  std::vector<RingElement> images(exterior.rank(), k.zero());
  images[i] = k.one();
  return DerivationOperator(exterior, -exterior.generator_degree(i), std::move(images));
}

std::vector<RingElement> psi(const DerivationOperator& theta) {
  const LinearOperator op = theta.as_operator();
  std::vector<RingElement> out;
  for (std::size_t j = 0; j < theta.algebra().rank(); ++j) {
    out.push_back(augmentation(op(theta.algebra().generator(j))));
  }
  return out;
}

DerivationOperator psi_inverse(const CliffordAlgebra& exterior, const std::vector<RingElement>& alpha, int degree) {
  return DerivationOperator(exterior, degree, alpha);
}

bool leibniz_check(const LinearOperator& op, const std::vector<std::pair<CliffordElement, CliffordElement>>& samples) {
  const bool odd_op = op.degree() % 2 != 0;
  for (const auto& [a, b] : samples) {
    CliffordElement rhs = op(a) * b;
    // Split a by parity so the sign applies termwise.
    CliffordElement even_part = a.algebra().zero(), odd_part = a.algebra().zero();
    for (const auto& [w, c] : a.terms()) (odd_word(w) ? odd_part : even_part) += a.algebra().word(w, c);
    rhs += even_part * op(b);
    rhs += odd_op ? -(odd_part * op(b)) : odd_part * op(b);
    if (!(op(a * b) == rhs)) return false;
  }
  return true;
}

bool leibniz_check(const LinearOperator& op) {
  const CliffordAlgebra& A = op.algebra();
  std::vector<std::pair<CliffordElement, CliffordElement>> samples;
  for (Mask u : A.basis()) {
    for (Mask v : A.basis()) samples.emplace_back(A.word(u), A.word(v));
  }
  return leibniz_check(op, samples);
}

CohomologyOperator compose(const CliffordAlgebra& exterior, const std::vector<DerivationOperator>& ops) {
  LinearOperator acc = LinearOperator::identity(exterior);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (!it->algebra().same(exterior)) fail(ErrorKind::MixedOwners, "derivations on different algebras");
    acc = it->as_operator().after(acc);
  }
  return {std::move(acc), {}};
}

CohomologyOperator theta(const CliffordAlgebra& exterior, const std::vector<std::size_t>& word) {
  std::vector<DerivationOperator> ops;
  for (auto i : word) ops.push_back(bockstein(exterior, i));
  CohomologyOperator out = compose(exterior, ops);
  out.word = word;
  return out;
}

DualFunctional Psi(const LinearOperator& op) {
  require_exterior(op.algebra());
  DualFunctional out;
  for (const auto& col : op.columns()) out.push_back(augmentation(col));
  return out;
}

DualFunctional Delta(const CliffordAlgebra& exterior, const std::vector<std::size_t>& word) {
  require_exterior(exterior);
  const QuotientRing& k = exterior.coefficients();
  DualFunctional out;
  for (Mask t : exterior.basis()) {
    Mask cur = t;
    bool negative = false, alive = true;
    for (auto it = word.rbegin(); it != word.rend() && alive; ++it) {
      const Mask bit = Mask{1} << *it;
      if (!(cur & bit)) {
        alive = false;
        break;
      }
      if (std::popcount(cur & (bit - 1)) % 2 == 1) negative = !negative;
      cur &= ~bit;
    }
    if (!alive || cur != 0) {
      out.push_back(k.zero());
    } else {
      out.push_back(negative ? k.reduce(-k.one()) : k.one());
    }
  }
  return out;
}

DualFunctional Delta(const CliffordAlgebra& exterior, const std::vector<std::vector<RingElement>>& wedge) {
  require_exterior(exterior);
  const QuotientRing& k = exterior.coefficients();
  const std::size_t n = exterior.rank();
  DualFunctional out(std::size_t{1} << n, k.zero());
  std::vector<std::size_t> idx(wedge.size(), 0);
  if (n == 0 && !wedge.empty()) return out;
  while (true) {
    RingElement c = k.one();
    for (std::size_t j = 0; j < wedge.size(); ++j) c = k.mul(c, wedge[j][idx[j]]);
    if (!c.is_zero()) {
      const DualFunctional d = Delta(exterior, idx);
      for (std::size_t t = 0; t < out.size(); ++t) out[t] = k.reduce(out[t] + k.mul(c, d[t]));
    }
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == n) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return out;
}

DualFunctional kronecker_dual(const CliffordAlgebra& algebra, const std::function<RingElement(Mask)>& f) {
  DualFunctional out;
  for (Mask w : algebra.basis()) out.push_back(algebra.coefficients().reduce(f(w)));
  return out;
}

bool theta_relations_hold(const CliffordAlgebra& exterior) {
  const std::size_t n = exterior.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const LinearOperator qij = theta(exterior, {i, j}).op;
      if (i == j) {
        if (!qij.is_zero()) return false;
      } else if (!(qij + theta(exterior, {j, i}).op).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<std::size_t> letters(Mask s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s >> i; ++i) {
    if (s & (Mask{1} << i)) out.push_back(i);
  }
  return out;
}

}  // namespace

bool theta_injective(const CliffordAlgebra& exterior) {
  const QuotientRing& k = exterior.coefficients();
  if (k.contains(k.ring().one())) return false;
  std::vector<bool> used(std::size_t{1} << exterior.rank(), false);
  for (Mask s : exterior.basis()) {
    const DualFunctional row = Psi(theta(exterior, letters(s)).op);
    std::size_t hits = 0;
    for (Mask t = 0; t < row.size(); ++t) {
      if (row[t].is_zero()) continue;
      if (!is_unit_sign(row[t], k) || used[t]) return false;
      used[t] = true;
      ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

bool psi_theta_square_commutes(const CliffordAlgebra& exterior) {
  for (Mask s : exterior.basis()) {
    const auto word = letters(s);
    std::vector<std::vector<RingElement>> wedge;
    for (auto i : word) wedge.push_back(psi(bockstein(exterior, i)));
    if (Psi(theta(exterior, word).op) != Delta(exterior, wedge)) return false;
  }
  return true;
}

AlgebraPresentation cohomology_presentation(const QuotientRingSpec& F) {
  if (!F.is_regular()) fail(ErrorKind::NotRegular, F.regularity().detail);
  std::vector<int> degrees;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < F.length(); ++i) {
    degrees.push_back(-(F.sequence_degree(i) + 1));
    names.push_back("Q" + std::to_string(i));
  }
  AlgebraPresentation p = present(CliffordAlgebra::exterior(F.quotient(), degrees, names));
  p.warnings.push_back("verified up to degree " + std::to_string(F.regularity().verified_up_to));
  return p;
}

}  // namespace regquot
