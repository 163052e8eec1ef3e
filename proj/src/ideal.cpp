#include "regquot/ideal.hpp"

#include <bit>
#include <sstream>

#include "regquot/error.hpp"
#include "regquot/quotient.hpp"

namespace regquot {

namespace {

void check_sequence(const Ring& ring, const std::vector<RingElement>& seq) {
  for (const auto& x : seq) {
    if (!x.ring().same(ring)) fail(ErrorKind::MixedRings, "sequence element from a different ring");
    if (x.is_zero()) continue;
    const auto d = x.degree();
    if (!d) fail(ErrorKind::NonHomogeneous, x.str() + " is not homogeneous");
    if (*d % 2 != 0) fail(ErrorKind::DegreeMismatch, x.str() + " has odd degree");
  }
}

void check_window(const Ring& ring, int D) {
  if (D > ring.max_degree()) {
    fail(ErrorKind::WindowOverflow,
         "requested degree " + std::to_string(D) + " exceeds ring window " + std::to_string(ring.max_degree()));
  }
}

int degree_or_zero(const RingElement& x) { return x.is_zero() ? 0 : *x.degree(); }

// Rows m * x for every monomial m of degree d, in coordinates of degree d + |x|.
Matrix multiplication_rows(const Ring& ring, const RingElement& x, int d) {
  const int xd = degree_or_zero(x);
  const DegreeSpace& target = ring.degree_basis(d + xd);
  Matrix rows;
  for (const auto& m : ring.degree_basis(d).monomials) {
    Vec v(target.size());
    auto prod = ring.raw_product(Terms{{m, Scalar(1)}}, x.terms());
    if (!prod) {
      fail(ErrorKind::WindowOverflow,
           "multiplying " + format_monomial(ring, m) + " by " + x.str() + " leaves the Laurent window");
    }
    for (const auto& [mm, c] : *prod) v[target.index.at(mm)] += c;
    rows.push_back(std::move(v));
  }
  return rows;
}

// Every degree-d monomial times x stays inside the window.
bool multiplication_fits(const Ring& ring, const RingElement& x, int d) {
  for (const auto& m : ring.degree_basis(d).monomials) {
    if (!ring.raw_product(Terms{{m, Scalar(1)}}, x.terms())) return false;
  }
  return true;
}

Lattice identity_lattice(const Pid& pid, std::size_t n) {
  Matrix rows(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return Lattice::span(pid, n, std::move(rows));
}

std::vector<RingElement> products(const std::vector<RingElement>& a, const std::vector<RingElement>& b) {
  std::vector<RingElement> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      auto prod = x.ring().raw_product(x.terms(), y.terms());
      if (!prod || prod->empty()) continue;
      out.push_back(x.ring().element(std::move(*prod)));
    }
  }
  return out;
}

std::vector<int> report_degrees(const Ring& ring, int D) {
  std::vector<int> out;
  for (int d = ring.min_degree(); d <= D; d += 2) out.push_back(d);
  return out;
}

}  // namespace

HomogeneousIdeal::HomogeneousIdeal(Ring ring, std::vector<RingElement> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  if (generators_.empty()) fail(ErrorKind::InvalidArgument, "an ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "ideal generators must be nonzero");
  }
  check_sequence(ring_, generators_);
}

Lattice HomogeneousIdeal::component(int d) const { return ideal_component(ring_, generators_, d); }

HomogeneousIdeal HomogeneousIdeal::operator*(const HomogeneousIdeal& other) const {
  auto gens = products(generators_, other.generators_);
  if (gens.empty()) fail(ErrorKind::WindowOverflow, "every generator product leaves the window");
  return HomogeneousIdeal(ring_, std::move(gens));
}

HomogeneousIdeal HomogeneousIdeal::operator+(const HomogeneousIdeal& other) const {
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return HomogeneousIdeal(ring_, std::move(gens));
}

std::string HomogeneousIdeal::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << generators_[i].str();
  }
  os << ")";
  return os.str();
}

RegularityReport check_regular_sequence(const Ring& ring, const std::vector<RingElement>& seq, int D) {
  if (seq.empty()) fail(ErrorKind::EmptySequence, "regularity of an empty sequence");
  check_sequence(ring, seq);
  check_window(ring, D);
  const Pid pid = ring.base().pid();
  RegularityReport report;
  report.verified_up_to = D;
  std::vector<RingElement> prefix;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const RingElement& x = seq[k];
    const int xd = degree_or_zero(x);
    for (int d = ring.min_degree(); d + xd <= D; d += 2) {
      const std::size_t n = ring.degree_basis(d).size();
      if (n == 0 || !multiplication_fits(ring, x, d)) continue;
      // {y in R_d : x*y in P_{d+|x|}} must equal P_d.
      Matrix stacked = multiplication_rows(ring, x, d);
      const Lattice target = ideal_component(ring, prefix, d + xd);
      for (const auto& row : target.basis()) {
        Vec neg = row;
        for (auto& c : neg) c = -c;
        stacked.push_back(std::move(neg));
      }
      const Lattice here = ideal_component(ring, prefix, d);
      for (const auto& y : left_kernel(pid, stacked, ring.degree_basis(d + xd).size())) {
        Vec v(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
        if (!here.contains(v)) {
          report.first_failure_index = k + 1;
          report.detail = x.str() + " is a zero divisor modulo the previous elements: it annihilates " +
                          ring.from_vector(d, v).str() + " in degree " + std::to_string(d);
          return report;
        }
      }
    }
    prefix.push_back(x);
    const Lattice unit = ideal_component(ring, prefix, 0);
    if (unit.contains(ring.to_vector(ring.one(), 0))) {
      report.first_failure_index = k + 1;
      report.detail = "the quotient by the first " + std::to_string(k + 1) + " elements is zero";
      return report;
    }
  }
  report.regular = true;
  report.detail = "regular, verified up to degree " + std::to_string(D);
  return report;
}

KoszulComplex::KoszulComplex(Ring ring, std::vector<RingElement> seq, std::vector<RingElement> coefficient_ideal)
    : ring_(std::move(ring)), seq_(std::move(seq)), coeff_ideal_(std::move(coefficient_ideal)) {
  check_sequence(ring_, seq_);
  check_sequence(ring_, coeff_ideal_);
  if (seq_.size() > 16) fail(ErrorKind::InvalidArgument, "Koszul complexes are limited to 16 elements");
  for (const auto& x : seq_) degrees_.push_back(degree_or_zero(x));
}

std::vector<KoszulComplex::Block> KoszulComplex::blocks(std::size_t i, int d) const {
  std::vector<Block> out;
  std::size_t offset = 0;
  const unsigned n = static_cast<unsigned>(seq_.size());
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != i) continue;
    int shift = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (s & (1u << j)) shift += degrees_[j];
    }
    const std::size_t size = d - shift > ring_.max_degree() ? 0 : ring_.degree_basis(d - shift).size();
    out.push_back({s, shift, offset, size});
    offset += size;
  }
  return out;
}

std::size_t KoszulComplex::chain_rank(std::size_t i, int d) const {
  if (i > seq_.size()) return 0;
  std::size_t n = 0;
  for (const auto& b : blocks(i, d)) n += b.size;
  return n;
}

Matrix KoszulComplex::differential(std::size_t i, int d) const {
  if (i == 0 || i > seq_.size()) return Matrix(chain_rank(i, d), Vec(chain_rank(i - 1, d)));
  const auto src = blocks(i, d);
  const auto dst = blocks(i - 1, d);
  const std::size_t ncols = chain_rank(i - 1, d);
  Matrix rows;
  for (const auto& b : src) {
    const auto& space = ring_.degree_basis(d - b.shift);
    for (const auto& m : space.monomials) {
      Vec v(ncols);
      int position = 0;
      for (unsigned j = 0; j < seq_.size(); ++j) {
        if (!(b.subset & (1u << j))) continue;
        const unsigned face = b.subset & ~(1u << j);
        const Block* target = nullptr;
        for (const auto& t : dst) {
          if (t.subset == face) target = &t;
        }
        const auto& tspace = ring_.degree_basis(d - target->shift);
        auto prod = ring_.raw_product(Terms{{m, Scalar(1)}}, seq_[j].terms());
        if (!prod) fail(ErrorKind::WindowOverflow, "Koszul differential leaves the Laurent window");
        const Scalar sign = position % 2 == 0 ? 1 : -1;
        for (const auto& [mm, c] : *prod) v[target->offset + tspace.index.at(mm)] += sign * c;
        ++position;
      }
      rows.push_back(std::move(v));
    }
  }
  return rows;
}

Matrix KoszulComplex::zero_rows(std::size_t i, int d) const {
  Matrix rows;
  if (i > seq_.size()) return rows;
  const std::size_t ncols = chain_rank(i, d);
  for (const auto& b : blocks(i, d)) {
    if (b.size == 0) continue;
    const Lattice lat = ideal_component(ring_, coeff_ideal_, d - b.shift);
    for (const auto& r : lat.basis()) {
      Vec v(ncols);
      for (std::size_t k = 0; k < r.size(); ++k) v[b.offset + k] = r[k];
      rows.push_back(std::move(v));
    }
  }
  return rows;
}

bool KoszulComplex::d_squared_zero(int D) const {
  for (int d = ring_.min_degree(); d <= D; d += 2) {
    for (std::size_t i = 2; i <= seq_.size(); ++i) {
      const Matrix a = differential(i, d);
      const Matrix b = differential(i - 1, d);
      const std::size_t ncols = chain_rank(i - 2, d);
      for (const auto& row : a) {
        Vec out(ncols);
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (row[k] != 0) out = add_scaled(std::move(out), b[k], row[k]);
        }
        if (!is_zero(out)) return false;
      }
    }
  }
  return true;
}

ModuleInvariants KoszulComplex::homology(std::size_t i, int d) const {
  const Pid pid = ring_.base().pid();
  const std::size_t n = chain_rank(i, d);
  if (n == 0) return {};
  // Cycles: lifts u with d(u) in the zero submodule of C_{i-1}.
  Lattice cycles(pid, n);
  if (i == 0) {
    cycles = identity_lattice(pid, n);
  } else {
    Matrix stacked = differential(i, d);
    for (auto row : zero_rows(i - 1, d)) {
      for (auto& c : row) c = -c;
      stacked.push_back(std::move(row));
    }
    Matrix gens;
    for (const auto& y : left_kernel(pid, stacked, chain_rank(i - 1, d))) {
      Vec u(n);
      const Matrix& dm = stacked;
      (void)dm;
      for (std::size_t k = 0; k < n; ++k) u[k] = y[k];
      gens.push_back(std::move(u));
    }
    cycles = Lattice::span(pid, n, std::move(gens));
  }
  Matrix boundary_rows = zero_rows(i, d);
  if (i < seq_.size()) {
    for (auto& row : differential(i + 1, d)) boundary_rows.push_back(std::move(row));
  }
  const Lattice boundaries = Lattice::span(pid, n, std::move(boundary_rows));
  return subquotient(cycles, boundaries);
}

bool GradedModuleReport::is_zero() const {
  for (const auto& [d, inv] : by_degree) {
    if (!inv.is_zero()) return false;
  }
  return true;
}

std::string GradedModuleReport::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, inv] : by_degree) {
    if (inv.is_zero()) continue;
    if (!first) os << ", ";
    os << "deg " << d << ": " << inv.str();
    first = false;
  }
  return first ? "0" : os.str();
}

GradedModuleReport tor(const HomogeneousIdeal& J, const HomogeneousIdeal& K, std::size_t i, int D) {
  const Ring& ring = J.ring();
  if (!K.ring().same(ring)) fail(ErrorKind::MixedRings, "Tor of ideals in different rings");
  check_window(ring, D);
  const auto reg = check_regular_sequence(ring, J.generators(), D);
  if (!reg.regular) fail(ErrorKind::NotVerifiedRegular, "Koszul complex is not a resolution: " + reg.detail);
  const KoszulComplex complex(ring, J.generators(), K.generators());
  GradedModuleReport out;
  out.homological_degree = i;
  out.window = D;
  for (int d : report_degrees(ring, D)) out.by_degree[d] = complex.homology(i, d);
  return out;
}

GradedModuleReport intersection_over_product(const HomogeneousIdeal& J, const HomogeneousIdeal& K, int D) {
  check_window(J.ring(), D);
  const HomogeneousIdeal JK = J * K;
  GradedModuleReport out;
  out.homological_degree = 1;
  out.window = D;
  for (int d : report_degrees(J.ring(), D)) {
    const Lattice meet = J.component(d).intersect(K.component(d));
    out.by_degree[d] = subquotient(meet, JK.component(d));
  }
  return out;
}

bool tor1_equals_intersection_over_product(const HomogeneousIdeal& J, const HomogeneousIdeal& K, int D) {
  return tor(J, K, 1, D).by_degree == intersection_over_product(J, K, D).by_degree;
}

std::vector<bool> check_condition_ii(const std::vector<HomogeneousIdeal>& ideals, int D) {
  if (ideals.size() < 2) fail(ErrorKind::InvalidArgument, "the product-intersection check needs at least two ideals");
  const Ring& ring = ideals.front().ring();
  for (const auto& I : ideals) {
    if (!I.ring().same(ring)) fail(ErrorKind::MixedRings, "ideals in different rings");
  }
  check_window(ring, D);
  std::vector<bool> out;
  HomogeneousIdeal prefix = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    const HomogeneousIdeal prod = prefix * ideals[k];
    bool holds = true;
    for (int d : report_degrees(ring, D)) {
      if (!(prod.component(d) == prefix.component(d).intersect(ideals[k].component(d)))) {
        holds = false;
        break;
      }
    }
    out.push_back(holds);
    prefix = prefix + ideals[k];
  }
  return out;
}

bool ConormalDecomposition::ok() const {
  for (const auto& d : degrees) {
    if (!d.ok()) return false;
  }
  return true;
}

ConormalDecomposition decompose_conormal(const std::vector<HomogeneousIdeal>& ideals, int D) {
  if (ideals.empty()) fail(ErrorKind::InvalidArgument, "no ideals to decompose");
  const Ring& ring = ideals.front().ring();
  check_window(ring, D);
  if (ideals.size() > 1) {
    const auto cond = check_condition_ii(ideals, D);
    for (std::size_t k = 0; k < cond.size(); ++k) {
      if (!cond[k]) {
        fail(ErrorKind::ConditionIIFails, "product and intersection differ at ideal " + std::to_string(k + 2));
      }
    }
  }
  const Pid pid = ring.base().pid();
  HomogeneousIdeal total = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) total = total + ideals[k];
  const HomogeneousIdeal square = total * total;

  ConormalDecomposition out;
  for (int d : report_degrees(ring, D)) {
    const std::size_t n = ring.degree_basis(d).size();
    DegreeDecomposition dd;
    dd.degree = d;
    const Lattice I = total.component(d);
    const Lattice I2 = square.component(d);
    std::vector<Lattice> A, B;
    Matrix gens;
    std::vector<std::size_t> block_start;
    for (const auto& Ii : ideals) {
      A.push_back(Ii.component(d));
      B.push_back((Ii * total).component(d));
      block_start.push_back(gens.size());
      gens.insert(gens.end(), A.back().basis().begin(), A.back().basis().end());
    }
    block_start.push_back(gens.size());
    dd.lhs = subquotient(I, I2);
    for (std::size_t i = 0; i < ideals.size(); ++i) dd.rhs.push_back(subquotient(A[i], B[i]));

    auto forward = [&](const Vec& alpha) {
      auto c = solve(pid, gens, alpha);
      if (!c) fail(ErrorKind::NotInIdeal, "element is not in the sum of the ideals");
      std::vector<Vec> parts;
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        Vec part(n);
        for (std::size_t r = block_start[i]; r < block_start[i + 1]; ++r) {
          if ((*c)[r] != 0) part = add_scaled(std::move(part), gens[r], (*c)[r]);
        }
        parts.push_back(B[i].reduce(std::move(part)));
      }
      return parts;
    };
    auto backward = [&](const std::vector<Vec>& parts) {
      Vec sum(n);
      for (const auto& p : parts) sum = add_scaled(std::move(sum), p, Scalar(1));
      return I2.reduce(std::move(sum));
    };
    auto coords = [](const Lattice& lat, const Vec& v) {
      auto c = lat.coordinates(v);
      return c ? *c : Vec(lat.rank());
    };

    dd.forward_well_defined = true;
    for (const auto& b : I2.basis()) {
      for (const auto& part : forward(b)) {
        if (!is_zero(part)) dd.forward_well_defined = false;
      }
    }
    dd.backward_well_defined = true;
    for (const auto& Bi : B) {
      if (!I2.contains(Bi)) dd.backward_well_defined = false;
    }
    dd.backward_after_forward_is_identity = true;
    for (const auto& g : I.basis()) {
      const auto parts = forward(g);
      Vec row;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const Vec c = coords(A[i], parts[i]);
        row.insert(row.end(), c.begin(), c.end());
      }
      dd.forward.push_back(std::move(row));
      if (!is_zero(I2.reduce(add_scaled(backward(parts), g, Scalar(-1))))) {
        dd.backward_after_forward_is_identity = false;
      }
    }
    dd.forward_after_backward_is_identity = true;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      for (const auto& beta : A[i].basis()) {
        std::vector<Vec> input(ideals.size(), Vec(n));
        input[i] = beta;
        const Vec image = backward(input);
        dd.backward.push_back(coords(I, image));
        const auto parts = forward(image);
        for (std::size_t j = 0; j < parts.size(); ++j) {
          const Vec expected = j == i ? B[j].reduce(beta) : Vec(n);
          if (!is_zero(B[j].reduce(add_scaled(parts[j], expected, Scalar(-1))))) {
            dd.forward_after_backward_is_identity = false;
          }
        }
      }
    }
    out.degrees.push_back(std::move(dd));
  }
  return out;
}

}  // namespace regquot
