#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regquot/base_ring.hpp"
#include "regquot/lattice.hpp"

namespace regquot {

using Monomial = std::vector<int>;
using Terms = std::map<Monomial, Scalar>;

struct Generator {
  std::string name;
  int degree = 0;
  bool invertible = false;
};

// Truncation window shared by every computation in a ring: total degree
// at most `degree`, invertible generators with exponent in [-laurent,
// laurent].  Degree-0 generators that are not invertible are capped at
// exponent `laurent` as well, since their degree alone bounds nothing.
struct Window {
  int degree = 12;
  int laurent = 2;
};

// Monomials of one total degree, in lexicographic order on exponents.
struct DegreeSpace {
  int degree = 0;
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;

  std::size_t size() const { return monomials.size(); }
};

class RingElement;

// A graded commutative ring concentrated in even degrees: a (Laurent)
// polynomial ring over a base ring modulo homogeneous relations.  Cheap to
// copy; all copies share one immutable presentation.
class Ring {
 public:
  Ring(BaseRing base, std::vector<Generator> generators, Window window);

  // Same generators and window, with relations given as terms of this ring.
  Ring with_relations(const std::vector<RingElement>& relations) const;
  Ring with_window(Window window) const;

  const BaseRing& base() const;
  const std::vector<Generator>& generators() const;
  std::size_t num_generators() const { return generators().size(); }
  const Window& window() const;
  const std::vector<Terms>& relations() const;

  int min_degree() const;
  int max_degree() const { return window().degree; }
  // Even degrees in [min_degree, max_degree].
  std::vector<int> degrees() const;

  // Throws WindowOverflow above the window; empty for odd or unreachable d.
  const DegreeSpace& degree_basis(int d) const;
  int degree_of(const Monomial& m) const;
  bool in_window(const Monomial& m) const;
  std::optional<std::size_t> generator_index(const std::string& name) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement scalar(const Scalar& c) const;
  RingElement generator(std::size_t i) const;
  RingElement monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;
  // Builds from raw terms, normalizing coefficients and reducing modulo
  // the relations.  Terms outside the window raise WindowOverflow.
  RingElement element(Terms terms) const;
  RingElement parse(const std::string& text) const;

  // Coordinates of a homogeneous element of degree d in degree_basis(d).
  Vec to_vector(const RingElement& e, int d) const;
  RingElement from_vector(int d, const Vec& v) const;
  // Relation rows (and m*e_i for ZZ/m) of degree d; the zero submodule
  // of the ring's degree-d component, presented over the PID.
  const Matrix& relation_rows(int d) const;

  std::string describe() const;

  bool same(const Ring& other) const { return data_ == other.data_; }
  bool operator==(const Ring& other) const { return same(other); }

  // Polynomial product without relation reduction; nullopt if a term
  // leaves the window.
  std::optional<Terms> raw_product(const Terms& a, const Terms& b) const;

 private:
  struct Data;
  explicit Ring(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<const Data> build(BaseRing base, std::vector<Generator> generators, Window window,
                                           std::vector<Terms> relations);
  std::shared_ptr<const Data> data_;
};

class RingElement {
 public:
  explicit RingElement(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous element.
  std::optional<int> degree() const;
  std::vector<int> degrees() const;
  RingElement homogeneous_part(int d) const;
  // Constant term as a base-ring scalar, when the element is a constant.
  std::optional<Scalar> as_scalar() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  RingElement scaled(const Scalar& c) const;
  RingElement pow(int e) const;

  bool operator==(const RingElement& o) const { return ring_.same(o.ring_) && terms_ == o.terms_; }

  std::string str() const;

 private:
  friend class Ring;
  Ring ring_;
  Terms terms_;
};

std::string format_monomial(const Ring& ring, const Monomial& m);

}  // namespace regquot
