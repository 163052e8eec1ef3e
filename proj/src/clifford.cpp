#include "regquot/clifford.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "regquot/error.hpp"

namespace regquot {

namespace {

int top_index(Mask w) { return std::bit_width(w) - 1; }
bool odd(Mask w) { return std::popcount(w) % 2 == 1; }

bool same_coefficients(const QuotientRing& a, const QuotientRing& b) {
  if (a.same(b)) return true;
  return a.ring().same(b.ring()) && a.ideal_contained_in(b) && b.ideal_contained_in(a);
}

void accumulate(std::map<Mask, RingElement>& into, Mask w, const RingElement& c, const QuotientRing& k) {
  if (c.is_zero()) return;
  auto it = into.find(w);
  if (it == into.end()) {
    into.emplace(w, c);
    return;
  }
  it->second = k.reduce(it->second + c);
  if (it->second.is_zero()) into.erase(it);
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

// Wraps sums in parentheses when used as a factor.
std::string factor(const RingElement& c) {
  const std::string s = c.str();
  return c.terms().size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(BilinearForm form, std::vector<std::string> names) {
  const std::size_t n = form.rank();
  if (n > kMaxCliffordRank) fail(ErrorKind::InvalidArgument, "Clifford rank is limited to 16");
  if (names.empty()) names = default_names(n);
  if (names.size() != n) fail(ErrorKind::InvalidArgument, "need one name per generator");
  std::vector<std::vector<RingElement>> s(n, std::vector<RingElement>(n, form.coefficients().zero()));
  bool exterior = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s[i][j] = i == j ? form.q(i) : form.polarized(i, j);
      if (!s[i][j].is_zero()) exterior = false;
    }
  }
  data_ = std::make_shared<Data>(Data{std::move(form), std::move(names), std::move(s), exterior});
}

CliffordAlgebra CliffordAlgebra::exterior(QuotientRing coefficients, std::vector<int> degrees,
                                          std::vector<std::string> names) {
  return CliffordAlgebra(BilinearForm::zero(std::move(coefficients), std::move(degrees)), std::move(names));
}

std::vector<Mask> CliffordAlgebra::basis() const {
  std::vector<Mask> out;
  for (Mask w = 0; w < (Mask{1} << rank()); ++w) out.push_back(w);
  return out;
}

int CliffordAlgebra::word_degree(Mask w) const {
  int d = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (w & (Mask{1} << i)) d += generator_degree(i);
  }
  return d;
}

std::string CliffordAlgebra::word_name(Mask w) const {
  if (w == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (!(w & (Mask{1} << i))) continue;
    if (!out.empty()) out += "*";
    out += names()[i];
  }
  return out;
}

CliffordElement CliffordAlgebra::zero() const { return CliffordElement(*this); }
CliffordElement CliffordAlgebra::one() const { return word(0); }
CliffordElement CliffordAlgebra::scalar(const RingElement& c) const { return word(0, c); }

CliffordElement CliffordAlgebra::generator(std::size_t i) const {
  if (i >= rank()) fail(ErrorKind::BadIndex, "generator index " + std::to_string(i) + " out of range");
  return word(Mask{1} << i);
}

CliffordElement CliffordAlgebra::word(Mask w, const RingElement& c) const {
  if (w >> rank()) fail(ErrorKind::BadIndex, "word uses a generator outside the algebra");
  CliffordElement e(*this);
  e.add_term(w, c);
  return e;
}

CliffordElement CliffordAlgebra::word(Mask w) const { return word(w, coefficients().one()); }

std::map<Mask, RingElement> CliffordAlgebra::times_generator(Mask w, std::size_t j) const {
  const QuotientRing& k = coefficients();
  const Mask aj = Mask{1} << j;
  std::map<Mask, RingElement> out;
  if (w == 0) {
    accumulate(out, aj, k.one(), k);
    return out;
  }
  const auto t = static_cast<std::size_t>(top_index(w));
  const Mask rest = w & ~(Mask{1} << t);
  if (t < j) {
    accumulate(out, w | aj, k.one(), k);
  } else if (t == j) {
    accumulate(out, rest, q(j), k);
  } else {
    // rest * a_t * a_j = -(rest * a_j) * a_t + s_jt * rest
    for (const auto& [m, c] : times_generator(rest, j)) accumulate(out, m | (Mask{1} << t), -c, k);
    accumulate(out, rest, s(j, t), k);
  }
  return out;
}

std::map<Mask, RingElement> CliffordAlgebra::multiply_words(Mask u, Mask v) const {
  const QuotientRing& k = coefficients();
  std::map<Mask, RingElement> cur{{u, k.one()}};
  for (std::size_t j = 0; j < rank(); ++j) {
    if (!(v & (Mask{1} << j))) continue;
    std::map<Mask, RingElement> next;
    for (const auto& [m, c] : cur) {
      for (const auto& [mm, cc] : times_generator(m, j)) accumulate(next, mm, k.mul(c, cc), k);
    }
    cur = std::move(next);
  }
  return cur;
}

RingElement CliffordElement::coefficient(Mask w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? algebra_.coefficients().zero() : it->second;
}

void CliffordElement::add_term(Mask w, const RingElement& c) {
  accumulate(terms_, w, algebra_.coefficients().reduce(c), algebra_.coefficients());
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (!algebra_.same(o.algebra_)) fail(ErrorKind::MixedAlgebras, "adding elements of different algebras");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) { return *this += -o; }

CliffordElement CliffordElement::operator-() const {
  CliffordElement out(algebra_);
  for (const auto& [w, c] : terms_) out.add_term(w, -c);
  return out;
}

CliffordElement CliffordElement::scaled(const RingElement& c) const {
  CliffordElement out(algebra_);
  for (const auto& [w, x] : terms_) out.add_term(w, x * c);
  return out;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  if (!a.algebra_.same(b.algebra_)) fail(ErrorKind::MixedAlgebras, "multiplying elements of different algebras");
  const QuotientRing& k = a.algebra_.coefficients();
  CliffordElement out(a.algebra_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      const RingElement c = k.mul(cu, cv);
      for (const auto& [w, cw] : a.algebra_.multiply_words(u, v)) out.add_term(w, c * cw);
    }
  }
  return out;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
  return algebra_.same(o.algebra_) && terms_ == o.terms_;
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  const RingElement one = algebra_.coefficients().one();
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string term;
    if (c == one) {
      term = algebra_.word_name(w);
    } else if (c == -one) {
      term = "-" + algebra_.word_name(w);
    } else {
      term = factor(c) + "·" + algebra_.word_name(w);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

CliffordElement antipode(const CliffordElement& u) {
  CliffordElement out = u.algebra().zero();
  for (const auto& [w, c] : u.terms()) out += u.algebra().word(w, odd(w) ? -c : c);
  return out;
}

RingElement augmentation(const CliffordElement& u) {
  if (!u.algebra().is_exterior()) {
    fail(ErrorKind::NotExterior, "the augmentation is only multiplicative for a zero form");
  }
  return u.coefficient(0);
}

std::string kind_name(AlgebraPresentation::Kind k) {
  switch (k) {
    case AlgebraPresentation::Kind::Exterior: return "exterior";
    case AlgebraPresentation::Kind::Clifford: return "clifford";
    case AlgebraPresentation::Kind::TensorTruncated: return "tensor-truncated";
  }
  return "?";
}

AlgebraPresentation present(const CliffordAlgebra& algebra) {
  AlgebraPresentation p;
  const std::size_t n = algebra.rank();
  p.generators = algebra.names();
  for (std::size_t i = 0; i < n; ++i) p.degrees.push_back(algebra.generator_degree(i));
  p.coefficients = algebra.coefficients().describe();
  bool diagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    p.relations.push_back(p.generators[i] + "^2 = " + algebra.q(i).str());
    for (std::size_t j = i + 1; j < n; ++j) {
      const RingElement& s = algebra.s(i, j);
      if (!s.is_zero()) diagonal = false;
      p.relations.push_back(p.generators[i] + "*" + p.generators[j] + " + " + p.generators[j] + "*" +
                            p.generators[i] + " = " + s.str());
    }
  }
  std::sort(p.relations.begin(), p.relations.end());

  auto join = [](const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
  };
  if (algebra.is_exterior()) {
    p.kind = AlgebraPresentation::Kind::Exterior;
    p.text = "Λ(" + join(p.generators, ", ") + ")";
  } else if (diagonal) {
    p.kind = AlgebraPresentation::Kind::TensorTruncated;
    std::vector<std::string> free, factors;
    for (std::size_t i = 0; i < n; ++i) {
      if (algebra.q(i).is_zero()) {
        free.push_back(p.generators[i]);
        continue;
      }
      const std::string q = algebra.q(i).str();
      const std::string rhs = q[0] == '-' || algebra.q(i).terms().size() > 1 ? "(" + q + ")" : q;
      factors.push_back("T(" + p.generators[i] + ")/(" + p.generators[i] + "^2 − " + rhs + ")");
    }
    if (!free.empty()) factors.insert(factors.begin(), "Λ(" + join(free, ", ") + ")");
    p.text = join(factors, " ⊗ ");
  } else {
    p.kind = AlgebraPresentation::Kind::Clifford;
    p.text = "Cl(" + join(p.generators, ", ") + " | " + join(p.relations, "; ") + ")";
  }
  return p;
}

namespace {

BilinearForm homology_form(const QuotientRingSpec& F, const QuotientRing& k) {
  return base_change_form(characteristic_form_diagonal(F), QuotientMap(F.quotient(), k));
}

}  // namespace

PairAlgebra::PairAlgebra(QuotientRingSpec F, QuotientRing k)
    : module_(F, k), algebra_(homology_form(F, k)) {}

PairAlgebra::PairAlgebra(QuotientRingSpec F, QuotientRing k, BilinearForm form)
    : module_(F, k), algebra_(std::move(form)) {
  if (!same_coefficients(algebra_.coefficients(), module_.coefficients())) {
    fail(ErrorKind::MixedCoefficients, "form coefficients differ from the pair's target");
  }
  if (algebra_.form().degrees() != module_.degrees()) {
    fail(ErrorKind::DegreeMismatch, "form degrees differ from the conormal degrees");
  }
}

CliffordElement PairAlgebra::phi(const RingElement& x) const {
  const auto coords = module_.coordinates(x);
  CliffordElement out = algebra_.zero();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) out += algebra_.generator(i).scaled(coords[i]);
  }
  return out;
}

AlgebraPresentation PairAlgebra::presentation() const {
  AlgebraPresentation p = present(algebra_);
  const auto& reg = source().regularity();
  if (!reg.regular) {
    p.isomorphism_asserted = false;
    p.warnings.push_back(kLiftOnly);
    p.warnings.push_back("sequence not regular: " + reg.detail);
  } else {
    p.warnings.push_back("verified up to degree " + std::to_string(reg.verified_up_to));
  }
  return p;
}

AlgebraPresentation homology_presentation(const QuotientRingSpec& F, const QuotientRing& k) {
  return PairAlgebra(F, k).presentation();
}

TensorElement::TensorElement(CliffordAlgebra left, CliffordAlgebra right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!same_coefficients(left_.coefficients(), right_.coefficients())) {
    fail(ErrorKind::MixedCoefficients, "tensor factors over different coefficient rings");
  }
}

void TensorElement::add_term(Mask u, Mask v, const RingElement& c) {
  const QuotientRing& k = left_.coefficients();
  const RingElement r = k.reduce(c);
  if (r.is_zero()) return;
  auto key = std::make_pair(u, v);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, r);
    return;
  }
  it->second = k.reduce(it->second + r);
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (!left_.same(o.left_) || !right_.same(o.right_)) fail(ErrorKind::MixedAlgebras, "different tensor algebras");
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (!a.left_.same(b.left_) || !a.right_.same(b.right_)) {
    fail(ErrorKind::MixedAlgebras, "multiplying elements of different tensor algebras");
  }
  const QuotientRing& k = a.left_.coefficients();
  TensorElement out(a.left_, a.right_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const auto& [u, v] = ka;
      const auto& [u2, v2] = kb;
      RingElement c = k.mul(ca, cb);
      if (odd(v) && odd(u2)) c = -c;
      const auto left = a.left_.multiply_words(u, u2);
      const auto right = a.right_.multiply_words(v, v2);
      for (const auto& [wl, cl] : left) {
        for (const auto& [wr, cr] : right) out.add_term(wl, wr, c * cl * cr);
      }
    }
  }
  return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return left_.same(o.left_) && right_.same(o.right_) && terms_ == o.terms_;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string term = left_.word_name(key.first) + "⊗" + right_.word_name(key.second);
    if (c != left_.coefficients().one()) term = factor(c) + "·" + term;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

TensorElement tensor(const CliffordElement& u, const CliffordElement& v) {
  TensorElement out(u.algebra(), v.algebra());
  const QuotientRing& k = u.algebra().coefficients();
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) out.add_term(wu, wv, k.mul(cu, cv));
  }
  return out;
}

TensorElement swap_factors(const TensorElement& t) {
  TensorElement out(t.right(), t.left());
  for (const auto& [key, c] : t.terms()) out.add_term(key.second, key.first, odd(key.first) && odd(key.second) ? -c : c);
  return out;
}

CliffordAlgebra orthogonal_sum(const CliffordAlgebra& a, const CliffordAlgebra& b) {
  if (!same_coefficients(a.coefficients(), b.coefficients())) {
    fail(ErrorKind::MixedCoefficients, "orthogonal sum over different coefficient rings");
  }
  const std::size_t n1 = a.rank(), n = a.rank() + b.rank();
  const QuotientRing& k = a.coefficients();
  std::vector<std::vector<RingElement>> entries(n, std::vector<RingElement>(n, k.zero()));
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    degrees.push_back(i < n1 ? a.generator_degree(i) : b.generator_degree(i - n1));
    for (std::size_t j = 0; j < n; ++j) {
      if (i < n1 && j < n1) entries[i][j] = a.form().entry(i, j);
      if (i >= n1 && j >= n1) entries[i][j] = b.form().entry(i - n1, j - n1);
    }
  }
  return CliffordAlgebra(BilinearForm(k, std::move(degrees), std::move(entries)));
}

TensorElement kunneth_map(const CliffordElement& u, const CliffordAlgebra& a, const CliffordAlgebra& b) {
  if (u.algebra().rank() != a.rank() + b.rank()) fail(ErrorKind::InvalidArgument, "rank mismatch in Kunneth map");
  TensorElement out(a, b);
  const Mask low = (Mask{1} << a.rank()) - 1;
  for (const auto& [w, c] : u.terms()) out.add_term(w & low, w >> a.rank(), c);
  return out;
}

bool kunneth_isomorphism_holds(const CliffordAlgebra& a, const CliffordAlgebra& b) {
  const CliffordAlgebra sum = orthogonal_sum(a, b);
  std::set<std::pair<Mask, Mask>> images;
  for (Mask w : sum.basis()) {
    const TensorElement t = kunneth_map(sum.word(w), a, b);
    if (t.terms().size() != 1) return false;
    images.insert(t.terms().begin()->first);
  }
  if (images.size() != (std::size_t{1} << sum.rank())) return false;
  for (Mask u : sum.basis()) {
    const TensorElement ku = kunneth_map(sum.word(u), a, b);
    for (Mask v : sum.basis()) {
      if (!(kunneth_map(sum.word(u) * sum.word(v), a, b) == ku * kunneth_map(sum.word(v), a, b))) return false;
    }
  }
  return true;
}

AlgebraMap::AlgebraMap(CliffordAlgebra source, CliffordAlgebra target, std::vector<CliffordElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.rank()) fail(ErrorKind::InvalidArgument, "need one image per generator");
  if (!source_.coefficients().ring().same(target_.coefficients().ring())) {
    fail(ErrorKind::MixedRings, "algebra map between different base rings");
  }
  (void)QuotientMap(source_.coefficients(), target_.coefficients());
  for (const auto& img : images_) {
    if (!img.algebra().same(target_)) fail(ErrorKind::MixedAlgebras, "image outside the target algebra");
  }
}

CliffordElement AlgebraMap::operator()(const CliffordElement& u) const {
  if (!u.algebra().same(source_)) fail(ErrorKind::MixedAlgebras, "element outside the source algebra");
  CliffordElement out = target_.zero();
  for (const auto& [w, c] : u.terms()) {
    CliffordElement term = target_.scalar(target_.coefficients().reduce(c));
    for (std::size_t i = 0; i < source_.rank(); ++i) {
      if (w & (Mask{1} << i)) term = term * images_[i];
    }
    out += term;
  }
  return out;
}

bool AlgebraMap::is_multiplicative() const {
  for (Mask u : source_.basis()) {
    const CliffordElement fu = (*this)(source_.word(u));
    for (Mask v : source_.basis()) {
      if (!((*this)(source_.word(u) * source_.word(v)) == fu * (*this)(source_.word(v)))) return false;
    }
  }
  return true;
}

bool AlgebraMap::respects_relations() const {
  const QuotientRing& l = target_.coefficients();
  for (std::size_t i = 0; i < source_.rank(); ++i) {
    for (std::size_t j = i; j < source_.rank(); ++j) {
      const CliffordElement lhs = i == j ? images_[i] * images_[i] : images_[i] * images_[j] + images_[j] * images_[i];
      const RingElement& rhs = i == j ? source_.q(i) : source_.s(i, j);
      if (!(lhs == target_.scalar(l.reduce(rhs)))) return false;
    }
  }
  return true;
}

AlgebraMap induced_algebra_map(const PairAlgebra& source, const PairAlgebra& target) {
  if (!source.source().ring().same(target.source().ring())) {
    fail(ErrorKind::MixedRings, "pairs over different rings");
  }
  std::vector<CliffordElement> images;
  for (const auto& x : source.source().sequence()) images.push_back(target.phi(x));
  AlgebraMap f(source.algebra(), target.algebra(), std::move(images));
  if (!f.respects_relations()) {
    fail(ErrorKind::NotCompatible, "generator images violate the Clifford relations after base change");
  }
  return f;
}

}  // namespace regquot
