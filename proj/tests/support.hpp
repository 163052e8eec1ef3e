#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "regquot/clifford.hpp"
#include "regquot/clifford_oracle.hpp"
#include "regquot/conormal.hpp"
#include "regquot/ideal.hpp"
#include "regquot/quotient.hpp"
#include "regquot/ring.hpp"

namespace testing_support {

using namespace regquot;

inline Ring make_ring(BaseRing base, const std::vector<Generator>& gens, int D = 12, int L = 2) {
  return Ring(base, gens, Window{D, L});
}

// F_p[x, y] (or ZZ[x, y]) with |x| = |y| = 2.
inline Ring xy_ring(BaseRing base, int D = 12) { return make_ring(base, {{"x", 2, false}, {"y", 2, false}}, D); }

inline QuotientRing plain(const Ring& r) { return QuotientRing(r, {}); }

// Coefficient ring base[v] with |v| = 2 for Clifford tests; generators of
// degree 1 then have q-values c*v.
inline Ring coefficient_ring(BaseRing base) { return make_ring(base, {{"v", 2, false}}, 12, 2); }

inline BilinearForm random_diagonal_form(const QuotientRing& k, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  const Ring& r = k.ring();
  std::vector<std::vector<RingElement>> e(n, std::vector<RingElement>(n, r.zero()));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = r.generator(0).scaled(Scalar(coef(rng)));
  return BilinearForm(k, std::vector<int>(n, 1), e);
}

inline BilinearForm random_form(const QuotientRing& k, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  const Ring& r = k.ring();
  std::vector<std::vector<RingElement>> e(n, std::vector<RingElement>(n, r.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i][j] = r.generator(0).scaled(Scalar(coef(rng)));
  }
  return BilinearForm(k, std::vector<int>(n, 1), e);
}

inline CliffordElement random_element(const CliffordAlgebra& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  CliffordElement out = A.zero();
  for (Mask w : A.basis()) out += A.word(w, A.coefficients().ring().scalar(Scalar(coef(rng))));
  return out;
}

// Engine products agree with the rewriting oracle on every basis pair.
inline bool engine_matches_oracle(const BilinearForm& b) {
  const CliffordAlgebra A(b);
  const BruteForceResult oracle = brute_force_presentation(b, 2 * b.rank() + 1);
  for (Mask u : A.basis()) {
    for (Mask v : A.basis()) {
      if (A.multiply_words(u, v) != oracle.products.at({u, v})) return false;
    }
  }
  return true;
}

// Smith invariants from gcds of k x k minors of a 2 x 2 or 3 x 3 integer
// matrix: d_1 ... d_k = gcd of all k-minors.
inline long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline std::vector<long> smith_by_minors(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<long> g(n + 1, 0);
  g[0] = 1;
  // all k x k minors for k = 1..n with rows and columns chosen as masks
  for (unsigned rows = 1; rows < (1u << n); ++rows) {
    for (unsigned cols = 1; cols < (1u << n); ++cols) {
      const auto k = static_cast<std::size_t>(__builtin_popcount(rows));
      if (k != static_cast<std::size_t>(__builtin_popcount(cols))) continue;
      std::vector<std::size_t> r, c;
      for (std::size_t i = 0; i < n; ++i) {
        if (rows & (1u << i)) r.push_back(i);
        if (cols & (1u << i)) c.push_back(i);
      }
      long det = 0;
      if (k == 1) det = m[r[0]][c[0]];
      if (k == 2) det = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]];
      if (k == 3) {
        det = m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]]) -
              m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]]) +
              m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]]);
      }
      g[k] = gcd_long(g[k], det);
    }
  }
  std::vector<long> out;
  for (std::size_t k = 1; k <= n && g[k] != 0; ++k) out.push_back(g[k] / g[k - 1]);
  return out;
}

// Multiset of cyclic summands: free rank plus sorted torsion.
struct Summands {
  std::size_t free_rank = 0;
  std::vector<Scalar> torsion;
  void add(const ModuleInvariants& m) {
    free_rank += m.free_rank;
    torsion.insert(torsion.end(), m.torsion.begin(), m.torsion.end());
    std::sort(torsion.begin(), torsion.end());
  }
  bool operator==(const Summands&) const = default;
};

// Total Tor of (R/I, R/K) against Lambda(k (x) I/I^2[1]), by total degree
// t = internal + homological, over all t whose contributions fit in the
// window.
inline bool tor_matches_exterior_ranks(const QuotientRingSpec& F, const std::vector<RingElement>& kgens, int D) {
  const Ring& ring = F.ring();
  const QuotientRing k(ring, kgens);
  const HomogeneousIdeal J(ring, F.sequence()), K(ring, kgens);
  const std::size_t n = F.length();
  std::vector<GradedModuleReport> tors;
  for (std::size_t i = 0; i <= n; ++i) tors.push_back(tor(J, K, i, D));
  std::vector<int> gen_degrees;
  for (std::size_t i = 0; i < n; ++i) gen_degrees.push_back(F.sequence_degree(i) + 1);
  const int lo = ring.min_degree();
  bool compared = false;
  for (int t = lo; t <= D; ++t) {
    bool inside = true;
    for (std::size_t i = 0; i <= n; ++i) {
      const int d = t - static_cast<int>(i);
      if ((d % 2 + 2) % 2 == 0 && (d < lo || d > D)) inside = false;
    }
    if (!inside) continue;
    Summands lhs, rhs;
    for (std::size_t i = 0; i <= n; ++i) {
      const int d = t - static_cast<int>(i);
      auto it = tors[i].by_degree.find(d);
      if (it != tors[i].by_degree.end()) lhs.add(it->second);
    }
    for (Mask w = 0; w < (Mask{1} << n); ++w) {
      int deg = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (w & (Mask{1} << i)) deg += gen_degrees[i];
      }
      const int e = t - deg;
      if (e % 2 != 0 || e < lo || e > D) continue;
      rhs.add(k.component_invariants(e));
    }
    if (!(lhs == rhs)) return false;
    compared = true;
  }
  return compared;
}

}  // namespace testing_support
