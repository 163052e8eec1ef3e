#include "regquot/clifford_oracle.hpp"

#include <algorithm>
#include <deque>

#include "regquot/error.hpp"

namespace regquot {

namespace {

using Word = std::vector<std::size_t>;

// q(v) = sum_kl v_k v_l b_kl for a 0/1 vector v.
RingElement quadratic(const BilinearForm& b, const std::vector<std::size_t>& support) {
  RingElement out = b.coefficients().zero();
  for (auto k : support) {
    for (auto l : support) out += b.entry(k, l);
  }
  return b.coefficients().reduce(out);
}

std::map<Mask, RingElement> rewrite(const BilinearForm& b, const Word& start, std::size_t word_bound) {
  const QuotientRing& k = b.coefficients();
  if (start.size() > word_bound) {
    fail(ErrorKind::BoundTooSmall, "word of length " + std::to_string(start.size()) + " exceeds bound " +
                                       std::to_string(word_bound));
  }
  std::map<Mask, RingElement> out;
  std::deque<std::pair<Word, RingElement>> work{{start, k.one()}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.front());
    work.pop_front();
    if (c.is_zero()) continue;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] < w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      Mask m = 0;
      for (auto g : w) m |= Mask{1} << g;
      auto it = out.find(m);
      if (it == out.end()) {
        out.emplace(m, c);
      } else {
        it->second = k.reduce(it->second + c);
        if (it->second.is_zero()) out.erase(it);
      }
      continue;
    }
    Word shorter = w;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i), shorter.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    if (w[i] == w[i + 1]) {
      work.emplace_back(std::move(shorter), k.mul(c, quadratic(b, {w[i]})));
      continue;
    }
    // a_x a_y = -a_y a_x + (q(a_x + a_y) - q(a_x) - q(a_y))
    const RingElement s = k.reduce(quadratic(b, {w[i], w[i + 1]}) - quadratic(b, {w[i]}) - quadratic(b, {w[i + 1]}));
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    work.emplace_back(std::move(swapped), k.reduce(-c));
    if (!s.is_zero()) work.emplace_back(std::move(shorter), k.mul(c, s));
  }
  return out;
}

Word letters(Mask m) {
  Word w;
  for (std::size_t i = 0; m >> i; ++i) {
    if (m & (Mask{1} << i)) w.push_back(i);
  }
  return w;
}

}  // namespace

BruteForceResult brute_force_presentation(const BilinearForm& b, std::size_t word_bound) {
  const std::size_t n = b.rank();
  if (n > 4) fail(ErrorKind::InvalidArgument, "the brute-force oracle handles rank at most 4");
  BruteForceResult out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) out.basis.push_back(m);
  for (Mask u : out.basis) {
    for (Mask v : out.basis) {
      Word w = letters(u);
      const Word wv = letters(v);
      w.insert(w.end(), wv.begin(), wv.end());
      out.products[{u, v}] = rewrite(b, w, word_bound);
    }
  }
  out.presentation = present(CliffordAlgebra(b));
  return out;
}

}  // namespace regquot
