#include "regquot/conormal.hpp"

#include "regquot/error.hpp"

namespace regquot {

namespace {

RegularityReport regularity_of(const Ring& ring, const std::vector<RingElement>& seq) {
  if (seq.empty()) {
    RegularityReport r;
    r.regular = true;
    r.verified_up_to = ring.max_degree();
    r.detail = "empty sequence";
    return r;
  }
  return check_regular_sequence(ring, seq, ring.max_degree());
}

}  // namespace

QuotientRingSpec::QuotientRingSpec(Ring ring, std::vector<RingElement> sequence, std::vector<RingElement> obstructions)
    : sequence_(std::move(sequence)), quotient_(ring, sequence_), regularity_(regularity_of(ring, sequence_)) {
  if (obstructions.empty()) obstructions.assign(sequence_.size(), ring.zero());
  if (obstructions.size() != sequence_.size()) {
    fail(ErrorKind::InvalidArgument, "need one obstruction per sequence element");
  }
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const RingElement& c = obstructions[i];
    if (!c.ring().same(ring)) fail(ErrorKind::MixedRings, "obstruction from a different ring");
    if (c.is_zero()) {
      tokens_.push_back({c, true});
      continue;
    }
    const int expected = 2 * sequence_degree(i) + 2;
    if (c.degree() != expected) {
      fail(ErrorKind::DegreeMismatch, "obstruction " + c.str() + " for " + sequence_[i].str() +
                                          " must have degree " + std::to_string(expected));
    }
    RingElement reduced = normal_form(c, {sequence_[i]}, ring.max_degree());
    const bool commutative = reduced.is_zero();
    tokens_.push_back({std::move(reduced), commutative});
  }
}

int QuotientRingSpec::sequence_degree(std::size_t i) const {
  const auto& x = sequence_.at(i);
  return x.is_zero() ? 0 : *x.degree();
}

QuotientRingSpec QuotientRingSpec::with_obstructions(std::vector<RingElement> obstructions) const {
  return QuotientRingSpec(ring(), sequence_, std::move(obstructions));
}

ConormalModule::ConormalModule(QuotientRingSpec parent, QuotientRing coefficients)
    : parent_(std::move(parent)), coefficients_(std::move(coefficients)) {
  if (!coefficients_.ring().same(parent_.ring())) {
    fail(ErrorKind::MixedRings, "coefficients must be a quotient of the same ring");
  }
  for (const auto& x : parent_.sequence()) {
    if (!coefficients_.contains(x)) {
      fail(ErrorKind::NotWellDefined, "coefficient ring does not kill " + x.str());
    }
  }
  const auto& seq = parent_.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i; j < seq.size(); ++j) {
      auto prod = ring_product(seq[i], seq[j]);
      if (prod) square_generators_.push_back(std::move(*prod));
    }
  }
}

std::optional<RingElement> ConormalModule::ring_product(const RingElement& a, const RingElement& b) {
  auto prod = a.ring().raw_product(a.terms(), b.terms());
  if (!prod || prod->empty()) return std::nullopt;
  return a.ring().element(std::move(*prod));
}

std::vector<int> ConormalModule::degrees() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(degree(i));
  return out;
}

std::vector<RingElement> ConormalModule::coordinates(const RingElement& x) const {
  const Ring& ring = parent_.ring();
  if (!x.ring().same(ring)) fail(ErrorKind::MixedRings, "element from a different ring");
  const auto& seq = parent_.sequence();
  std::vector<RingElement> out(seq.size(), ring.zero());
  const Pid pid = ring.base().pid();
  for (int d : x.degrees()) {
    const RingElement part = x.homogeneous_part(d);
    Matrix gens;
    std::vector<std::pair<std::size_t, Monomial>> labels;
    const DegreeSpace& space = ring.degree_basis(d);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const int shift = parent_.sequence_degree(i);
      for (const auto& m : ring.degree_basis(d - shift).monomials) {
        auto prod = ring.raw_product(Terms{{m, Scalar(1)}}, seq[i].terms());
        if (!prod) continue;
        Vec v(space.size());
        for (const auto& [mm, c] : *prod) v[space.index.at(mm)] += c;
        gens.push_back(std::move(v));
        labels.emplace_back(i, m);
      }
    }
    const std::size_t tracked = gens.size();
    const Lattice squares = ideal_component(ring, square_generators_, d);
    gens.insert(gens.end(), squares.basis().begin(), squares.basis().end());
    const auto c = solve(pid, gens, ring.to_vector(part, d));
    if (!c) fail(ErrorKind::NotInIdeal, part.str() + " is not in the ideal " + parent_.quotient().describe());
    for (std::size_t r = 0; r < tracked; ++r) {
      if ((*c)[r] != 0) out[labels[r].first] += ring.monomial(labels[r].second, (*c)[r]);
    }
  }
  for (auto& e : out) e = coefficients_.reduce(e);
  return out;
}

ConormalModule conormal_module(const QuotientRingSpec& F) {
  if (!F.is_regular()) fail(ErrorKind::NotRegular, F.regularity().detail);
  return ConormalModule(F, F.quotient());
}

BilinearForm::BilinearForm(QuotientRing coefficients, std::vector<int> degrees,
                           std::vector<std::vector<RingElement>> entries)
    : coefficients_(std::move(coefficients)), degrees_(std::move(degrees)), entries_(std::move(entries)) {
  const std::size_t n = degrees_.size();
  for (int d : degrees_) {
    if (d % 2 == 0) fail(ErrorKind::DegreeMismatch, "form generators must have odd degree");
  }
  if (entries_.size() != n) fail(ErrorKind::InvalidArgument, "form matrix has the wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) fail(ErrorKind::InvalidArgument, "form matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      RingElement& e = entries_[i][j];
      if (!e.ring().same(coefficients_.ring())) fail(ErrorKind::MixedRings, "form entry from a different ring");
      e = coefficients_.reduce(e);
      if (e.is_zero()) continue;
      const int expected = degrees_[i] + degrees_[j];
      if (e.degree() != expected) {
        fail(ErrorKind::DegreeMismatch, "form entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                            e.str() + " must have degree " + std::to_string(expected));
      }
    }
  }
}

BilinearForm BilinearForm::zero(QuotientRing coefficients, std::vector<int> degrees) {
  const std::size_t n = degrees.size();
  const RingElement z = coefficients.zero();
  return BilinearForm(std::move(coefficients), std::move(degrees),
                      std::vector<std::vector<RingElement>>(n, std::vector<RingElement>(n, z)));
}

RingElement BilinearForm::polarized(std::size_t i, std::size_t j) const {
  return coefficients_.reduce(entries_[i][j] + entries_[j][i]);
}

bool BilinearForm::is_zero() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

bool BilinearForm::is_diagonal() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      if (i != j && !entries_[i][j].is_zero()) return false;
    }
  }
  return true;
}

bool BilinearForm::operator==(const BilinearForm& other) const {
  return coefficients_.ring().same(other.coefficients_.ring()) && degrees_ == other.degrees_ &&
         entries_ == other.entries_;
}

std::vector<std::vector<std::string>> BilinearForm::table() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : entries_) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(e.str());
    out.push_back(std::move(r));
  }
  return out;
}

BilinearForm characteristic_form_diagonal(const QuotientRingSpec& F) {
  const std::size_t n = F.length();
  const QuotientRing& coeffs = F.quotient();
  std::vector<std::vector<RingElement>> entries(n, std::vector<RingElement>(n, F.ring().zero()));
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    degrees.push_back(F.sequence_degree(i) + 1);
    entries[i][i] = coeffs.reduce(-F.tokens()[i].obstruction);
  }
  return BilinearForm(coeffs, std::move(degrees), std::move(entries));
}

BilinearForm base_change_form(const BilinearForm& b, const QuotientMap& pi) {
  if (!b.coefficients().same(pi.source()) && !(b.coefficients().ideal_contained_in(pi.target()))) {
    fail(ErrorKind::NotWellDefined, "base change map does not start at the form's coefficients");
  }
  auto entries = b.entries();
  for (auto& row : entries) {
    for (auto& e : row) e = pi(e);
  }
  return BilinearForm(pi.target(), b.degrees(), std::move(entries));
}

OppositeForms opposite_form(const QuotientRingSpec& F, const std::vector<RingElement>& opposite_obstructions) {
  const QuotientRingSpec op = F.with_obstructions(opposite_obstructions);
  BilinearForm ring_form = characteristic_form_diagonal(op);
  BilinearForm mixed = BilinearForm::zero(F.quotient(), ring_form.degrees());
  return {std::move(ring_form), std::move(mixed)};
}

}  // namespace regquot
