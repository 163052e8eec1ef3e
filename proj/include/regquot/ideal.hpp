#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regquot/lattice.hpp"
#include "regquot/ring.hpp"

namespace regquot {

class HomogeneousIdeal {
 public:
  HomogeneousIdeal(Ring ring, std::vector<RingElement> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<RingElement>& generators() const { return generators_; }
  Lattice component(int d) const;

  // Generated by all pairwise products of generators.
  HomogeneousIdeal operator*(const HomogeneousIdeal& other) const;
  HomogeneousIdeal operator+(const HomogeneousIdeal& other) const;

  std::string str() const;

 private:
  Ring ring_;
  std::vector<RingElement> generators_;
};

struct RegularityReport {
  bool regular = false;
  // 1-based index of the first element that fails, when not regular.
  std::optional<std::size_t> first_failure_index;
  int verified_up_to = 0;
  std::string detail;
};

// Each x_k is checked to be a non-zero-divisor on R/(x_1..x_{k-1}) in every
// degree where source and target fit below D, and R/(x_1..x_k) must stay
// nonzero in degree 0.
RegularityReport check_regular_sequence(const Ring& ring, const std::vector<RingElement>& seq, int D);

// Koszul complex of a sequence, tensored with R/K, in one internal degree.
class KoszulComplex {
 public:
  KoszulComplex(Ring ring, std::vector<RingElement> seq, std::vector<RingElement> coefficient_ideal = {});

  std::size_t length() const { return seq_.size(); }
  // Differential d_i : C_i -> C_{i-1} in internal degree d; row r is the
  // image of the r-th basis element of C_i.
  Matrix differential(std::size_t i, int d) const;
  std::size_t chain_rank(std::size_t i, int d) const;
  // Zero submodule of C_i (coefficient ideal and ring relations), as rows.
  Matrix zero_rows(std::size_t i, int d) const;
  bool d_squared_zero(int D) const;
  ModuleInvariants homology(std::size_t i, int d) const;

 private:
  struct Block {
    unsigned subset;
    int shift;
    std::size_t offset;
    std::size_t size;
  };
  std::vector<Block> blocks(std::size_t i, int d) const;

  Ring ring_;
  std::vector<RingElement> seq_;
  std::vector<RingElement> coeff_ideal_;
  std::vector<int> degrees_;
};

struct GradedModuleReport {
  std::size_t homological_degree = 0;
  int window = 0;
  std::map<int, ModuleInvariants> by_degree;

  bool is_zero() const;
  std::string str() const;
};

// Tor_i^{R}(R/J, R/K) via the Koszul resolution of R/J.  J must be
// generated by a sequence that is regular within the window.
GradedModuleReport tor(const HomogeneousIdeal& J, const HomogeneousIdeal& K, std::size_t i, int D);

// (J cap K)/(J*K), degreewise.
GradedModuleReport intersection_over_product(const HomogeneousIdeal& J, const HomogeneousIdeal& K, int D);
bool tor1_equals_intersection_over_product(const HomogeneousIdeal& J, const HomogeneousIdeal& K, int D);

// Entry k-2 tells whether (I_1 + ... + I_{k-1}) * I_k == (I_1 + ... + I_{k-1}) cap I_k
// in every degree up to D, for k = 2..r.
std::vector<bool> check_condition_ii(const std::vector<HomogeneousIdeal>& ideals, int D);

struct DegreeDecomposition {
  int degree = 0;
  ModuleInvariants lhs;               // (I/I^2)_d
  std::vector<ModuleInvariants> rhs;  // (R/I (x) I_i/I_i^2)_d
  // Rows: generators of the source (echelon rows of I_d, resp. of each
  // I_{i,d}); entries: coordinates of the canonical image.
  Matrix forward;
  Matrix backward;
  bool forward_well_defined = false;
  bool backward_well_defined = false;
  bool backward_after_forward_is_identity = false;
  bool forward_after_backward_is_identity = false;

  bool ok() const {
    return forward_well_defined && backward_well_defined && backward_after_forward_is_identity &&
           forward_after_backward_is_identity;
  }
};

struct ConormalDecomposition {
  std::vector<DegreeDecomposition> degrees;
  bool ok() const;
};

// I/I^2 = (+)_i R/I (x) I_i/I_i^2 with I = sum of the I_i, realized by
// explicit maps in each degree and checked to be mutually inverse.
ConormalDecomposition decompose_conormal(const std::vector<HomogeneousIdeal>& ideals, int D);

}  // namespace regquot
