#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regquot/base_ring.hpp"

namespace regquot {

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;  // row-major; a module element is a row

// Row echelon (Hermite) form over a PID.  Pivots are canonical associates
// and entries above a pivot are canonical remainders, so the echelon rows
// of a submodule are unique and double as its normal form.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
  // transform[i] * input == rows[i]; filled only when tracking.
  Matrix transform;
  // Combinations of the input rows that vanish; a basis of the left kernel.
  Matrix kernel;
};

Echelon echelonize(const Pid& pid, Matrix rows, std::size_t ncols, bool track);

// Basis of {y : y * rows == 0}.
Matrix left_kernel(const Pid& pid, const Matrix& rows, std::size_t ncols);

// Some c with c * gens == target, if one exists.
std::optional<Vec> solve(const Pid& pid, const Matrix& gens, const Vec& target);

// Nonzero invariant factors d_1 | d_2 | ... of the row module, canonical.
std::vector<Scalar> smith_invariants(const Pid& pid, Matrix m, std::size_t ncols);

// Submodule of pid^dim.
class Lattice {
 public:
  Lattice(Pid pid, std::size_t dim) : pid_(pid), dim_(dim) {}
  static Lattice span(Pid pid, std::size_t dim, Matrix gens);

  const Pid& pid() const { return pid_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Lattice& other) const;
  std::optional<Vec> coordinates(Vec v) const;

  Lattice operator+(const Lattice& other) const;
  Lattice intersect(const Lattice& other) const;

  bool operator==(const Lattice& other) const { return basis_ == other.basis_; }

 private:
  Pid pid_;
  std::size_t dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Isomorphism type of a finitely generated module over the PID:
// pid^free_rank plus the cyclic torsion summands.
struct ModuleInvariants {
  std::size_t free_rank = 0;
  std::vector<Scalar> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const ModuleInvariants&) const = default;
  std::string str() const;
};

// Invariants of sub/quot with quot contained in sub.
ModuleInvariants subquotient(const Lattice& sub, const Lattice& quot);

bool is_zero(const Vec& v);
Vec add_scaled(Vec a, const Vec& b, const Scalar& factor);

}  // namespace regquot
