#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "regquot/conormal.hpp"

namespace regquot {

// A normal-form word a_{i1}...a_{ik}, i1 < ... < ik, as a bit set.
using Mask = unsigned;

inline constexpr std::size_t kMaxCliffordRank = 16;

class CliffordElement;

// Cl(V, q) over a quotient ring k_*: generators a_i of odd degree, with
// a_i^2 = q_i and a_i a_j + a_j a_i = b_ij + b_ji.
class CliffordAlgebra {
 public:
  explicit CliffordAlgebra(BilinearForm form, std::vector<std::string> names = {});
  static CliffordAlgebra exterior(QuotientRing coefficients, std::vector<int> degrees,
                                  std::vector<std::string> names = {});

  const BilinearForm& form() const { return data_->form; }
  const QuotientRing& coefficients() const { return data_->form.coefficients(); }
  std::size_t rank() const { return data_->form.rank(); }
  const std::vector<std::string>& names() const { return data_->names; }
  int generator_degree(std::size_t i) const { return data_->form.degrees()[i]; }
  const RingElement& q(std::size_t i) const { return data_->s[i][i]; }
  // Polarized value for i != j.
  const RingElement& s(std::size_t i, std::size_t j) const { return data_->s[i][j]; }
  bool is_exterior() const { return data_->exterior; }

  // All 2^n words in increasing numeric order of masks.
  std::vector<Mask> basis() const;
  int word_degree(Mask w) const;
  std::string word_name(Mask w) const;

  CliffordElement zero() const;
  CliffordElement one() const;
  CliffordElement scalar(const RingElement& c) const;
  CliffordElement generator(std::size_t i) const;
  CliffordElement word(Mask w, const RingElement& c) const;
  CliffordElement word(Mask w) const;

  // Product of two basis words, in normal form.
  std::map<Mask, RingElement> multiply_words(Mask u, Mask v) const;

  bool same(const CliffordAlgebra& other) const { return data_ == other.data_; }

 private:
  struct Data {
    BilinearForm form;
    std::vector<std::string> names;
    std::vector<std::vector<RingElement>> s;  // q on the diagonal
    bool exterior = true;
  };
  // word * a_j
  std::map<Mask, RingElement> times_generator(Mask w, std::size_t j) const;
  std::shared_ptr<const Data> data_;
};

class CliffordElement {
 public:
  explicit CliffordElement(CliffordAlgebra algebra) : algebra_(std::move(algebra)) {}

  const CliffordAlgebra& algebra() const { return algebra_; }
  const std::map<Mask, RingElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RingElement coefficient(Mask w) const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  CliffordElement operator-() const;
  CliffordElement scaled(const RingElement& c) const;

  bool operator==(const CliffordElement& o) const;
  std::string str() const;

 private:
  friend class CliffordAlgebra;
  void add_term(Mask w, const RingElement& c);
  CliffordAlgebra algebra_;
  std::map<Mask, RingElement> terms_;
};

// Principal automorphism: a_i -> -a_i.
CliffordElement antipode(const CliffordElement& u);
// Coefficient of the empty word; only multiplicative for exterior algebras.
RingElement augmentation(const CliffordElement& u);

struct AlgebraPresentation {
  enum class Kind { Exterior, Clifford, TensorTruncated };
  Kind kind = Kind::Exterior;
  std::vector<std::string> generators;
  std::vector<int> degrees;
  // Sorted lexicographically.
  std::vector<std::string> relations;
  std::string coefficients;
  std::string text;
  bool isomorphism_asserted = true;
  std::vector<std::string> warnings;
};

std::string kind_name(AlgebraPresentation::Kind k);
AlgebraPresentation present(const CliffordAlgebra& algebra);

inline constexpr const char* kLiftOnly = "lift only, isomorphism not asserted";

// The model of k_*^R(F): Cl(k_* (x) I/I^2[1], q^k_F) together with the
// characteristic homomorphism.
class PairAlgebra {
 public:
  PairAlgebra(QuotientRingSpec F, QuotientRing k);
  // Same module over k with a caller-supplied form.
  PairAlgebra(QuotientRingSpec F, QuotientRing k, BilinearForm form);

  const QuotientRingSpec& source() const { return module_.parent(); }
  const QuotientRing& target() const { return module_.coefficients(); }
  const ConormalModule& module() const { return module_; }
  const CliffordAlgebra& algebra() const { return algebra_; }

  // Image of the class of x in I/I^2[1].
  CliffordElement phi(const RingElement& x) const;
  AlgebraPresentation presentation() const;

 private:
  ConormalModule module_;
  CliffordAlgebra algebra_;
};

AlgebraPresentation homology_presentation(const QuotientRingSpec& F, const QuotientRing& k);

// Elements of A (x) B with the Koszul sign rule.
class TensorElement {
 public:
  TensorElement(CliffordAlgebra left, CliffordAlgebra right);

  const CliffordAlgebra& left() const { return left_; }
  const CliffordAlgebra& right() const { return right_; }
  const std::map<std::pair<Mask, Mask>, RingElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Mask u, Mask v, const RingElement& c);
  TensorElement& operator+=(const TensorElement& o);
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  bool operator==(const TensorElement& o) const;
  std::string str() const;

 private:
  CliffordAlgebra left_;
  CliffordAlgebra right_;
  std::map<std::pair<Mask, Mask>, RingElement> terms_;
};

TensorElement tensor(const CliffordElement& u, const CliffordElement& v);
// tau(u (x) v) = (-1)^{|u||v|} v (x) u
TensorElement swap_factors(const TensorElement& t);

// Cl(V1 _|_ V2): generators of `a` followed by those of `b`.
CliffordAlgebra orthogonal_sum(const CliffordAlgebra& a, const CliffordAlgebra& b);
// Cl(V1 _|_ V2) -> Cl(V1) (x) Cl(V2), a_i -> a_i (x) 1 or 1 (x) a_j.
TensorElement kunneth_map(const CliffordElement& u, const CliffordAlgebra& a, const CliffordAlgebra& b);
// The map above is bijective on bases and multiplicative on all basis pairs.
bool kunneth_isomorphism_holds(const CliffordAlgebra& a, const CliffordAlgebra& b);

// Algebra map determined by the images of the generators.
class AlgebraMap {
 public:
  AlgebraMap(CliffordAlgebra source, CliffordAlgebra target, std::vector<CliffordElement> images);

  const CliffordAlgebra& source() const { return source_; }
  const CliffordAlgebra& target() const { return target_; }
  const std::vector<CliffordElement>& images() const { return images_; }
  CliffordElement operator()(const CliffordElement& u) const;
  // f(u v) == f(u) f(v) on all basis pairs.
  bool is_multiplicative() const;
  // Images satisfy the target's relations for the source's form.
  bool respects_relations() const;

 private:
  CliffordAlgebra source_;
  CliffordAlgebra target_;
  std::vector<CliffordElement> images_;
};

// For I inside J and k -> l canonical: a_i goes to the class of x_i in
// J/J^2, written in the target basis with coefficients pushed to l.
// Throws NotCompatible if the images violate the Clifford relations.
AlgebraMap induced_algebra_map(const PairAlgebra& source, const PairAlgebra& target);

}  // namespace regquot
