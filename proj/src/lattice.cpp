#include "regquot/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "regquot/error.hpp"

namespace regquot {

namespace {

void fix(const Pid& pid, Vec& v) {
  if (pid.kind() != Pid::Kind::PrimeField) return;
  for (auto& x : v) x = pid.normalize(x);
}

void axpy(const Pid& pid, Vec& y, const Scalar& a, const Vec& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] != 0) y[i] -= a * x[i];
  }
  fix(pid, y);
}

void scale(const Pid& pid, Vec& v, const Scalar& a) {
  for (auto& x : v) x *= a;
  fix(pid, v);
}

Vec combine(const Pid& pid, const Scalar& s, const Vec& a, const Scalar& t, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] + t * b[i];
  fix(pid, out);
  return out;
}

bool is_diagonal(const Matrix& m) {
  std::vector<std::size_t> cols;
  for (const auto& row : m) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) {
        ++count;
        cols.push_back(j);
      }
    }
    if (count > 1) return false;
  }
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

Matrix transpose(const Matrix& m, std::size_t ncols) {
  Matrix t(ncols, Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vec add_scaled(Vec a, const Vec& b, const Scalar& factor) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += factor * b[i];
  return a;
}

Echelon echelonize(const Pid& pid, Matrix a, std::size_t ncols, bool track) {
  const std::size_t m = a.size();
  for (auto& row : a) fix(pid, row);
  Matrix t;
  if (track) {
    t.assign(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i) t[i][i] = 1;
  }
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i) {
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    std::swap(a[r], a[piv]);
    if (track) std::swap(t[r], t[piv]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      const Scalar x = a[r][c];
      const Scalar y = a[i][c];
      if (pid.divides(x, y)) {
        const Scalar q = y / x;
        axpy(pid, a[i], q, a[r]);
        if (track) axpy(pid, t[i], q, t[r]);
      } else {
        const auto [g, s, u] = pid.gcdext(x, y);
        const Scalar xg = x / g;
        const Scalar yg = y / g;
        Vec top = combine(pid, s, a[r], u, a[i]);
        a[i] = combine(pid, xg, a[i], -yg, a[r]);
        a[r] = std::move(top);
        if (track) {
          Vec ttop = combine(pid, s, t[r], u, t[i]);
          t[i] = combine(pid, xg, t[i], -yg, t[r]);
          t[r] = std::move(ttop);
        }
      }
    }
    const Scalar unit = pid.normalizer(a[r][c]);
    scale(pid, a[r], unit);
    if (track) scale(pid, t[r], unit);
    const Scalar pivot = a[r][c];
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      const Scalar q = (a[i][c] - pid.rem(a[i][c], pivot)) / pivot;
      axpy(pid, a[i], q, a[r]);
      if (track) axpy(pid, t[i], q, t[r]);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rows.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r));
  if (track) {
    out.transform.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(r));
    out.kernel.assign(t.begin() + static_cast<std::ptrdiff_t>(r), t.end());
  }
  return out;
}

Matrix left_kernel(const Pid& pid, const Matrix& rows, std::size_t ncols) {
  return echelonize(pid, rows, ncols, true).kernel;
}

std::optional<Vec> solve(const Pid& pid, const Matrix& gens, const Vec& target) {
  const std::size_t ncols = target.size();
  if (gens.empty()) {
    if (is_zero(target)) return Vec{};
    return std::nullopt;
  }
  Echelon e = echelonize(pid, gens, ncols, true);
  Vec v = target;
  Vec coeff(gens.size());
  for (std::size_t j = 0; j < e.rows.size(); ++j) {
    const Scalar& x = v[e.pivots[j]];
    if (x == 0) continue;
    const Scalar& piv = e.rows[j][e.pivots[j]];
    if (!pid.divides(piv, x)) return std::nullopt;
    const Scalar q = x / piv;
    axpy(pid, v, q, e.rows[j]);
    for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] += q * e.transform[j][k];
  }
  if (!is_zero(v)) return std::nullopt;
  fix(pid, coeff);
  return coeff;
}

std::vector<Scalar> smith_invariants(const Pid& pid, Matrix m, std::size_t ncols) {
  std::size_t cols = ncols;
  for (;;) {
    Echelon e = echelonize(pid, std::move(m), cols, false);
    m = std::move(e.rows);
    if (is_diagonal(m)) break;
    m = transpose(m, cols);
    cols = m.empty() ? 0 : m.front().size();
    if (m.empty()) break;
  }
  std::vector<Scalar> diag;
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (x != 0) diag.push_back(pid.canonical(x));
    }
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Scalar g = pid.gcd(diag[i], diag[j]);
      const Scalar l = pid.lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

Lattice Lattice::span(Pid pid, std::size_t dim, Matrix gens) {
  Lattice out(pid, dim);
  Echelon e = echelonize(pid, std::move(gens), dim, false);
  out.basis_ = std::move(e.rows);
  out.pivots_ = std::move(e.pivots);
  return out;
}

Vec Lattice::reduce(Vec v) const {
  fix(pid_, v);
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const Scalar& x = v[pivots_[j]];
    if (x == 0) continue;
    const Scalar& piv = basis_[j][pivots_[j]];
    const Scalar q = (x - pid_.rem(x, piv)) / piv;
    axpy(pid_, v, q, basis_[j]);
  }
  return v;
}

bool Lattice::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Lattice::contains(const Lattice& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Lattice::coordinates(Vec v) const {
  fix(pid_, v);
  Vec coeff(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const Scalar& x = v[pivots_[j]];
    if (x == 0) continue;
    const Scalar& piv = basis_[j][pivots_[j]];
    if (!pid_.divides(piv, x)) return std::nullopt;
    coeff[j] = pid_.normalize(x / piv);
    axpy(pid_, v, coeff[j], basis_[j]);
  }
  if (!is_zero(v)) return std::nullopt;
  return coeff;
}

Lattice Lattice::operator+(const Lattice& other) const {
  Matrix gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(pid_, dim_, std::move(gens));
}

Lattice Lattice::intersect(const Lattice& other) const {
  Matrix stacked = basis_;
  for (const auto& row : other.basis_) {
    Vec neg = row;
    for (auto& x : neg) x = -x;
    stacked.push_back(std::move(neg));
  }
  Matrix ker = left_kernel(pid_, stacked, dim_);
  Matrix gens;
  for (const auto& y : ker) {
    Vec v(dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (y[i] != 0) v = add_scaled(std::move(v), basis_[i], y[i]);
    }
    gens.push_back(std::move(v));
  }
  return span(pid_, dim_, std::move(gens));
}

ModuleInvariants subquotient(const Lattice& sub, const Lattice& quot) {
  Matrix coords;
  for (const auto& row : quot.basis()) {
    auto c = sub.coordinates(row);
    if (!c) fail(ErrorKind::InvalidArgument, "subquotient: denominator lattice is not contained in numerator");
    coords.push_back(std::move(*c));
  }
  const Pid& pid = sub.pid();
  const auto inv = smith_invariants(pid, std::move(coords), sub.rank());
  ModuleInvariants out;
  out.free_rank = sub.rank() - inv.size();
  for (const auto& d : inv) {
    if (!pid.is_unit(d)) out.torsion.push_back(d);
  }
  return out;
}

std::string ModuleInvariants::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "R^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "R/(" << t.get_str() << ")";
    first = false;
  }
  return os.str();
}

}  // namespace regquot
