#include "regquot/quotient.hpp"

#include <sstream>

#include "regquot/error.hpp"

namespace regquot {

Lattice ideal_component(const Ring& ring, const std::vector<RingElement>& gens, int d) {
  const DegreeSpace& space = ring.degree_basis(d);
  Matrix rows = ring.relation_rows(d);
  for (const auto& g : gens) {
    if (!g.ring().same(ring)) fail(ErrorKind::MixedRings, "ideal generator from a different ring");
    if (g.is_zero()) continue;
    const auto gd = g.degree();
    if (!gd) fail(ErrorKind::NonHomogeneous, "ideal generator " + g.str() + " is not homogeneous");
    if (d - *gd > ring.max_degree()) continue;
    for (const auto& m : ring.degree_basis(d - *gd).monomials) {
      auto prod = ring.raw_product(Terms{{m, Scalar(1)}}, g.terms());
      if (!prod) continue;
      Vec v(space.size());
      for (const auto& [mm, c] : *prod) v[space.index.at(mm)] += c;
      rows.push_back(std::move(v));
    }
  }
  return Lattice::span(ring.base().pid(), space.size(), std::move(rows));
}

RingElement normal_form(const RingElement& e, const std::vector<RingElement>& gens, int d_max) {
  const Ring& ring = e.ring();
  if (d_max > ring.max_degree()) {
    fail(ErrorKind::WindowOverflow, "d_max " + std::to_string(d_max) + " exceeds the ring window");
  }
  if (e.is_zero()) return e;
  const auto d = e.degree();
  if (!d) fail(ErrorKind::NonHomogeneous, e.str() + " is not homogeneous");
  if (*d > d_max) fail(ErrorKind::WindowOverflow, e.str() + " has degree above " + std::to_string(d_max));
  const Lattice lat = ideal_component(ring, gens, *d);
  return ring.from_vector(*d, lat.reduce(ring.to_vector(e, *d)));
}

QuotientRing::QuotientRing(Ring ring, std::vector<RingElement> gens) {
  auto data = std::make_shared<Data>(Data{std::move(ring), std::move(gens), {}});
  for (const auto& g : data->gens) {
    if (!g.ring().same(data->ring)) fail(ErrorKind::MixedRings, "ideal generator from a different ring");
    if (!g.is_homogeneous()) fail(ErrorKind::NonHomogeneous, "ideal generator " + g.str() + " is not homogeneous");
  }
  for (int d : data->ring.degrees()) data->components.emplace(d, ideal_component(data->ring, data->gens, d));
  data_ = std::move(data);
}

const Lattice& QuotientRing::component(int d) const {
  auto it = data_->components.find(d);
  if (it == data_->components.end()) {
    fail(ErrorKind::WindowOverflow, "degree " + std::to_string(d) + " is outside the window");
  }
  return it->second;
}

RingElement QuotientRing::reduce(const RingElement& e) const {
  const Ring& r = ring();
  if (!e.ring().same(r)) fail(ErrorKind::MixedRings, "element from a different ring");
  RingElement out = r.zero();
  for (int d : e.degrees()) {
    const RingElement part = e.homogeneous_part(d);
    out += r.from_vector(d, component(d).reduce(r.to_vector(part, d)));
  }
  return out;
}

bool QuotientRing::ideal_contained_in(const QuotientRing& other) const {
  if (!ring().same(other.ring())) fail(ErrorKind::MixedRings, "quotients of different rings");
  for (const auto& g : generators()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

ModuleInvariants QuotientRing::component_invariants(int d) const {
  const std::size_t n = ring().degree_basis(d).size();
  Matrix identity(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
  return subquotient(Lattice::span(ring().base().pid(), n, identity), component(d));
}

std::string QuotientRing::describe() const {
  std::ostringstream os;
  os << ring().describe();
  if (!generators().empty()) {
    os << "/(";
    for (std::size_t i = 0; i < generators().size(); ++i) {
      if (i) os << ", ";
      os << generators()[i].str();
    }
    os << ")";
  }
  return os.str();
}

QuotientMap::QuotientMap(QuotientRing source, QuotientRing target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_.ring().same(target_.ring())) fail(ErrorKind::MixedRings, "quotient map between different rings");
  for (const auto& g : source_.generators()) {
    if (!target_.contains(g)) {
      fail(ErrorKind::NotWellDefined, "map does not kill " + g.str() + " (not in " + target_.describe() + ")");
    }
  }
}

QuotientMap QuotientMap::then(const QuotientMap& next) const {
  if (!target_.same(next.source_) && !target_.ideal_contained_in(next.source_)) {
    fail(ErrorKind::NotWellDefined, "maps do not compose");
  }
  return QuotientMap(source_, next.target_);
}

}  // namespace regquot
