#include "regquot/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "regquot/error.hpp"
#include "regquot/expr.hpp"

namespace regquot {

struct Ring::Data {
  BaseRing base = BaseRing::integers();
  std::vector<Generator> generators;
  Window window;
  std::vector<Terms> relations;
  int min_degree = 0;
  std::map<int, DegreeSpace> spaces;
  std::map<int, Matrix> zero_rows;
  std::map<int, Lattice> zero_lattice;
  DegreeSpace empty;
  Matrix no_rows;
};

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::shared_ptr<const Ring::Data> Ring::build(BaseRing base, std::vector<Generator> generators, Window window,
                                              std::vector<Terms> relations) {
  auto d = std::make_shared<Data>();
  d->base = base;
  d->generators = std::move(generators);
  d->window = window;
  d->relations = std::move(relations);
  if (window.degree < 0) fail(ErrorKind::InvalidArgument, "degree window must be non-negative");
  if (window.laurent < 0) fail(ErrorKind::InvalidArgument, "Laurent window must be non-negative");
  std::set<std::string> names;
  for (const auto& g : d->generators) {
    if (!valid_name(g.name)) fail(ErrorKind::SemanticError, "invalid generator name '" + g.name + "'");
    if (!names.insert(g.name).second) fail(ErrorKind::SemanticError, "duplicate generator '" + g.name + "'");
    if (g.degree % 2 != 0) {
      fail(ErrorKind::SemanticError, "generator " + g.name + " has odd degree " + std::to_string(g.degree));
    }
    if (g.degree < 0) {
      fail(ErrorKind::SemanticError, "generator " + g.name + " has negative degree " + std::to_string(g.degree));
    }
    if (g.invertible) d->min_degree -= window.laurent * g.degree;
  }

  // Enumerate every monomial in the window, bucketed by degree.
  const std::size_t n = d->generators.size();
  std::vector<int> rest_min(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    rest_min[i] = rest_min[i + 1] - (d->generators[i].invertible ? window.laurent * d->generators[i].degree : 0);
  }
  Monomial m(n, 0);
  auto dfs = [&](auto&& self, std::size_t i, int deg) -> void {
    if (i == n) {
      auto& space = d->spaces[deg];
      space.degree = deg;
      space.monomials.push_back(m);
      return;
    }
    const Generator& g = d->generators[i];
    const int lo = g.invertible ? -window.laurent : 0;
    const bool capped = g.invertible || g.degree == 0;
    for (int e = lo;; ++e) {
      if (capped && e > window.laurent) break;
      const int next = deg + e * g.degree;
      if (next + rest_min[i + 1] > window.degree) break;
      m[i] = e;
      self(self, i + 1, next);
    }
    m[i] = 0;
  };
  dfs(dfs, 0, 0);
  for (auto& [deg, space] : d->spaces) {
    std::sort(space.monomials.begin(), space.monomials.end());
    for (std::size_t k = 0; k < space.monomials.size(); ++k) space.index[space.monomials[k]] = k;
  }

  // Zero submodule of each degree: relation multiples, plus m*e_i over ZZ/m.
  const Ring view(d);
  const Pid pid = d->base.pid();
  for (const auto& [deg, space] : d->spaces) {
    Matrix rows;
    for (const auto& rel : d->relations) {
      auto it = d->spaces.find(deg - view.degree_of(rel.begin()->first));
      if (it == d->spaces.end()) continue;
      for (const auto& mono : it->second.monomials) {
        auto prod = view.raw_product(Terms{{mono, Scalar(1)}}, rel);
        if (!prod) continue;
        Vec v(space.size());
        for (const auto& [mm, c] : *prod) v[space.index.at(mm)] += c;
        rows.push_back(std::move(v));
      }
    }
    if (const long t = d->base.torsion(); t != 0) {
      for (std::size_t k = 0; k < space.size(); ++k) {
        Vec v(space.size());
        v[k] = t;
        rows.push_back(std::move(v));
      }
    }
    d->zero_lattice.emplace(deg, Lattice::span(pid, space.size(), rows));
    d->zero_rows.emplace(deg, std::move(rows));
  }
  return d;
}

Ring::Ring(BaseRing base, std::vector<Generator> generators, Window window)
    : data_(build(base, std::move(generators), window, {})) {}

Ring Ring::with_relations(const std::vector<RingElement>& relations) const {
  std::vector<Terms> rels = data_->relations;
  for (const auto& r : relations) {
    if (!r.ring().same(*this)) fail(ErrorKind::MixedRings, "relation belongs to a different ring");
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) fail(ErrorKind::NonHomogeneous, "relation " + r.str() + " is not homogeneous");
    rels.push_back(r.terms());
  }
  return Ring(build(data_->base, data_->generators, data_->window, std::move(rels)));
}

Ring Ring::with_window(Window window) const {
  Ring fresh(data_->base, data_->generators, window);
  if (data_->relations.empty()) return fresh;
  std::vector<RingElement> rels;
  for (const auto& r : data_->relations) rels.push_back(fresh.element(r));
  return fresh.with_relations(rels);
}

const BaseRing& Ring::base() const { return data_->base; }
const std::vector<Generator>& Ring::generators() const { return data_->generators; }
const Window& Ring::window() const { return data_->window; }
const std::vector<Terms>& Ring::relations() const { return data_->relations; }
int Ring::min_degree() const { return data_->min_degree; }

std::vector<int> Ring::degrees() const {
  std::vector<int> out;
  for (int d = min_degree(); d <= max_degree(); d += 2) out.push_back(d);
  return out;
}

const DegreeSpace& Ring::degree_basis(int d) const {
  if (d > data_->window.degree) {
    fail(ErrorKind::WindowOverflow,
         "degree " + std::to_string(d) + " exceeds window " + std::to_string(data_->window.degree));
  }
  auto it = data_->spaces.find(d);
  return it == data_->spaces.end() ? data_->empty : it->second;
}

int Ring::degree_of(const Monomial& m) const {
  int deg = 0;
  for (std::size_t i = 0; i < m.size(); ++i) deg += m[i] * data_->generators[i].degree;
  return deg;
}

bool Ring::in_window(const Monomial& m) const {
  const int L = data_->window.laurent;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Generator& g = data_->generators[i];
    if (g.invertible) {
      if (m[i] < -L || m[i] > L) return false;
    } else {
      if (m[i] < 0) return false;
      if (g.degree == 0 && m[i] > L) return false;
    }
  }
  return degree_of(m) <= data_->window.degree;
}

std::optional<std::size_t> Ring::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < data_->generators.size(); ++i) {
    if (data_->generators[i].name == name) return i;
  }
  return std::nullopt;
}

RingElement Ring::zero() const { return RingElement(*this); }
RingElement Ring::one() const { return scalar(Scalar(1)); }
RingElement Ring::scalar(const Scalar& c) const { return element(Terms{{Monomial(num_generators(), 0), c}}); }

RingElement Ring::generator(std::size_t i) const {
  if (i >= num_generators()) fail(ErrorKind::BadIndex, "no generator " + std::to_string(i));
  Monomial m(num_generators(), 0);
  m[i] = 1;
  return monomial(m);
}

RingElement Ring::monomial(const Monomial& m, const Scalar& c) const { return element(Terms{{m, c}}); }

RingElement Ring::element(Terms terms) const {
  RingElement out(*this);
  for (auto& [m, c] : terms) {
    if (m.size() != num_generators()) fail(ErrorKind::InvalidArgument, "monomial has wrong arity");
    if (!in_window(m)) {
      fail(ErrorKind::WindowOverflow, "monomial " + format_monomial(*this, m) + " leaves the window");
    }
    Scalar v = data_->base.normalize(c);
    if (v != 0) out.terms_.emplace(m, std::move(v));
  }
  if (data_->relations.empty()) return out;
  Terms reduced;
  for (int d : out.degrees()) {
    const DegreeSpace& space = degree_basis(d);
    Vec v(space.size());
    for (const auto& [m, c] : out.terms_) {
      if (degree_of(m) == d) v[space.index.at(m)] = c;
    }
    v = data_->zero_lattice.at(d).reduce(std::move(v));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) reduced.emplace(space.monomials[k], data_->base.normalize(v[k]));
    }
  }
  out.terms_ = std::move(reduced);
  return out;
}

namespace {

struct RingEnv {
  using value_type = RingElement;
  const Ring& ring;
  RingElement number(const Scalar& c) const { return ring.scalar(c); }
  RingElement symbol(const std::string& name, std::size_t col) const {
    auto i = ring.generator_index(name);
    if (!i) fail(ErrorKind::SemanticError, "column " + std::to_string(col) + ": unknown symbol '" + name + "'");
    return ring.generator(*i);
  }
  RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
  RingElement sub(const RingElement& a, const RingElement& b) const { return a - b; }
  RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
  RingElement neg(const RingElement& a) const { return -a; }
  RingElement pow(const RingElement& a, int e, std::size_t) const { return a.pow(e); }
};

}  // namespace

RingElement Ring::parse(const std::string& text) const { return expr::evaluate(expr::parse(text), RingEnv{*this}); }

Vec Ring::to_vector(const RingElement& e, int d) const {
  if (!e.ring().same(*this)) fail(ErrorKind::MixedRings, "element belongs to a different ring");
  const DegreeSpace& space = degree_basis(d);
  Vec v(space.size());
  for (const auto& [m, c] : e.terms()) {
    if (degree_of(m) != d) {
      fail(ErrorKind::NonHomogeneous, e.str() + " has a term outside degree " + std::to_string(d));
    }
    v[space.index.at(m)] = c;
  }
  return v;
}

RingElement Ring::from_vector(int d, const Vec& v) const {
  const DegreeSpace& space = degree_basis(d);
  Terms t;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) t.emplace(space.monomials[k], v[k]);
  }
  return element(std::move(t));
}

const Matrix& Ring::relation_rows(int d) const {
  auto it = data_->zero_rows.find(d);
  return it == data_->zero_rows.end() ? data_->no_rows : it->second;
}

std::optional<Terms> Ring::raw_product(const Terms& a, const Terms& b) const {
  Terms out;
  Monomial m(num_generators());
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      if (!in_window(m)) return std::nullopt;
      auto [it, inserted] = out.emplace(m, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << data_->base.name() << "[";
  for (std::size_t i = 0; i < num_generators(); ++i) {
    if (i) os << ", ";
    os << data_->generators[i].name;
    if (data_->generators[i].invertible) os << "^±1";
  }
  os << "]";
  if (!data_->relations.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < data_->relations.size(); ++i) {
      if (i) os << ", ";
      RingElement r(*this);
      r.terms_ = data_->relations[i];
      os << r.str();
    }
    os << ")";
  }
  return os.str();
}

bool RingElement::is_homogeneous() const { return degrees().size() <= 1; }

std::optional<int> RingElement::degree() const {
  const auto ds = degrees();
  if (ds.size() != 1) return std::nullopt;
  return ds.front();
}

std::vector<int> RingElement::degrees() const {
  std::set<int> ds;
  for (const auto& [m, c] : terms_) ds.insert(ring_.degree_of(m));
  return {ds.begin(), ds.end()};
}

RingElement RingElement::homogeneous_part(int d) const {
  RingElement out(ring_);
  for (const auto& [m, c] : terms_) {
    if (ring_.degree_of(m) == d) out.terms_.emplace(m, c);
  }
  return out;
}

std::optional<Scalar> RingElement::as_scalar() const {
  if (terms_.empty()) return Scalar(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (std::any_of(m.begin(), m.end(), [](int e) { return e != 0; })) return std::nullopt;
  return c;
}

RingElement RingElement::operator-() const { return scaled(Scalar(-1)); }

RingElement& RingElement::operator+=(const RingElement& o) {
  if (!ring_.same(o.ring_)) fail(ErrorKind::MixedRings, "adding elements of different rings");
  Terms t = terms_;
  for (const auto& [m, c] : o.terms_) t[m] += c;
  *this = ring_.element(std::move(t));
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement& RingElement::operator*=(const RingElement& o) {
  if (!ring_.same(o.ring_)) fail(ErrorKind::MixedRings, "multiplying elements of different rings");
  auto prod = ring_.raw_product(terms_, o.terms_);
  if (!prod) fail(ErrorKind::WindowOverflow, "product (" + str() + ")*(" + o.str() + ") leaves the window");
  *this = ring_.element(std::move(*prod));
  return *this;
}

RingElement RingElement::scaled(const Scalar& c) const {
  Terms t = terms_;
  for (auto& [m, v] : t) v *= c;
  return ring_.element(std::move(t));
}

RingElement RingElement::pow(int e) const {
  if (e >= 0) {
    RingElement out = ring_.one();
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }
  if (terms_.size() != 1) fail(ErrorKind::InvalidArgument, "only monomials can be inverted: " + str());
  const auto& [m, c] = *terms_.begin();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0 && !ring_.generators()[i].invertible) {
      fail(ErrorKind::InvalidArgument, ring_.generators()[i].name + " is not invertible");
    }
  }
  if (!ring_.base().is_unit(c)) fail(ErrorKind::InvalidArgument, c.get_str() + " is not a unit");
  Monomial inv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) inv[i] = -m[i];
  return ring_.monomial(inv, Scalar(1) / c).pow(-e);
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << ring.generators()[i].name;
    if (m[i] != 1) os << "^" << m[i];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  // Ascending degree; within a degree, x^2 before x*y before y^2.
  std::vector<std::pair<Monomial, Scalar>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    return ring_.degree_of(a.first) < ring_.degree_of(b.first);
  });
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    Scalar a = c;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    a = abs(a);
    if (constant) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << format_monomial(ring_, m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace regquot
