#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "regquot/lattice.hpp"
#include "regquot/ring.hpp"

namespace regquot {

// Degree-d component of the ideal generated by `gens`, together with the
// ring's zero submodule, as a lattice in coordinates of degree_basis(d).
// Multiples that leave the Laurent window are not representable and are
// left out.
Lattice ideal_component(const Ring& ring, const std::vector<RingElement>& gens, int d);

// Canonical coset representative of a homogeneous element modulo the
// ideal generated by `gens`.  Zero exactly when e lies in the ideal.
RingElement normal_form(const RingElement& e, const std::vector<RingElement>& gens, int d_max);

// R_*/I realized through degreewise normal forms.  All ideal components in
// the window are computed at construction; afterwards the object is
// read-only and may be shared across threads.
class QuotientRing {
 public:
  QuotientRing(Ring ring, std::vector<RingElement> gens);

  const Ring& ring() const { return data_->ring; }
  const std::vector<RingElement>& generators() const { return data_->gens; }
  const Lattice& component(int d) const;

  RingElement reduce(const RingElement& e) const;
  bool contains(const RingElement& e) const { return reduce(e).is_zero(); }
  // I is contained in `other`'s ideal, checked on generators.
  bool ideal_contained_in(const QuotientRing& other) const;

  RingElement mul(const RingElement& a, const RingElement& b) const { return reduce(a * b); }
  RingElement add(const RingElement& a, const RingElement& b) const { return reduce(a + b); }
  RingElement one() const { return reduce(ring().one()); }
  RingElement zero() const { return ring().zero(); }

  // Isomorphism type of (R/I)_d over the base PID.
  ModuleInvariants component_invariants(int d) const;

  std::string describe() const;

  bool same(const QuotientRing& other) const { return data_ == other.data_; }

 private:
  struct Data {
    Ring ring;
    std::vector<RingElement> gens;
    std::map<int, Lattice> components;
  };
  std::shared_ptr<const Data> data_;
};

// Canonical map R_*/I -> R_*/J induced by the identity of R_*; well
// defined when I is contained in J (checked at construction).
class QuotientMap {
 public:
  QuotientMap(QuotientRing source, QuotientRing target);

  const QuotientRing& source() const { return source_; }
  const QuotientRing& target() const { return target_; }
  RingElement operator()(const RingElement& e) const { return target_.reduce(e); }
  QuotientMap then(const QuotientMap& next) const;

 private:
  QuotientRing source_;
  QuotientRing target_;
};

}  // namespace regquot
