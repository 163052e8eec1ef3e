#include "regquot/morava.hpp"

#include "regquot/derivations.hpp"
#include "regquot/error.hpp"

namespace regquot {

namespace {

struct Parts {
  Ring ring;
  std::vector<RingElement> sequence;
  std::vector<RingElement> obstructions;
};

Parts make_parts(long p, int n, int degree, int laurent) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"v" + std::to_string(i), morava_degree(p, i), i == n});
  Ring ring(BaseRing::localized(p), gens, Window{degree, laurent});
  std::vector<RingElement> seq{ring.scalar(Scalar(p))};
  for (int i = 1; i < n; ++i) seq.push_back(ring.generator(static_cast<std::size_t>(i - 1)));
  std::vector<RingElement> obstructions(static_cast<std::size_t>(n), ring.zero());
  if (p == 2) obstructions.back() = ring.generator(static_cast<std::size_t>(n - 1));
  return {ring, seq, obstructions};
}

}  // namespace

int morava_degree(long p, int i) {
  long v = 1;
  for (int k = 0; k < i; ++k) v *= p;
  return static_cast<int>(2 * (v - 1));
}

MoravaScenario build_scenario(long p, int n, std::optional<int> degree, int laurent) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be at least 1");
  if (n > 6) fail(ErrorKind::InvalidArgument, "n is limited to 6");
  const int needed = morava_degree(p, n) + 2;
  const int D = degree.value_or(needed);
  if (D < needed) {
    fail(ErrorKind::WindowTooSmall, "window degree " + std::to_string(D) + " is below |v_n| + 2 = " +
                                        std::to_string(needed));
  }
  if (laurent < 1) fail(ErrorKind::WindowTooSmall, "the Laurent window must allow v_n^{+-1}");
  Parts parts = make_parts(p, n, D, laurent);
  QuotientRingSpec F(parts.ring, parts.sequence, parts.obstructions);
  return {p, n, parts.ring, F, parts.obstructions};
}

AlgebraPresentation kn_homology(const MoravaScenario& s) { return homology_presentation(s.F, s.F.quotient()); }

AlgebraPresentation kn_cohomology(const MoravaScenario& s) { return cohomology_presentation(s.F); }

BilinearForm kn_form(const MoravaScenario& s) { return characteristic_form_diagonal(s.F); }

}  // namespace regquot
