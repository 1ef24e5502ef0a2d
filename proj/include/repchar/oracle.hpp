#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "repchar/laurent.hpp"

namespace repchar {
namespace oracle {

class SizeGuard : public std::runtime_error {
 public:
  explicit SizeGuard(const std::string& what) : std::runtime_error(what) {}
};

// A representation given literally by the weights of its basis states.
// Deliberately independent of the Weyl character formula: the SO(9)
// spinor instance is the 16 hardcoded sign vectors, not a D-quotient.
struct WeightedRep {
  std::vector<Monomial> weights;

  std::size_t size() const { return weights.size(); }

  LaurentPoly character() const {
    LaurentPoly p;
    for (const auto& w : weights) p.add_term(w, 1);
    return p;
  }
};

inline WeightedRep spinor_weights() {
  WeightedRep rep;
  for (int s = 0; s < 16; ++s) {
    Monomial m{0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)] = (s >> i) & 1 ? 1 : -1;
    rep.weights.push_back(m);
  }
  return rep;
}

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

// Literal character of Alt_n(rep): the sum over n-element subsets of
// basis states of the product monomial.  Guarded so a bad call cannot
// start an astronomically large enumeration.
inline LaurentPoly direct_alt_character(const WeightedRep& rep, int n) {
  if (n < 0) throw std::invalid_argument("direct_alt_character: n < 0");
  if (static_cast<std::size_t>(n) > rep.size())
    throw SizeGuard("direct_alt_character: n exceeds the basis size");
  if (rep.size() > 16 || detail::binomial(rep.size(), static_cast<std::uint64_t>(n)) > (1u << 21))
    throw SizeGuard("direct_alt_character: instance too large for subset enumeration");

  LaurentPoly acc;
  std::vector<int> idx(static_cast<std::size_t>(n));
  // lexicographic subset walk
  auto emit = [&] {
    Monomial m{0, 0, 0, 0, 0};
    for (int i : idx)
      for (std::size_t v = 0; v < kNumVars; ++v)
        m[v] += rep.weights[static_cast<std::size_t>(i)][v];
    acc.add_term(m, 1);
  };
  if (n == 0) return LaurentPoly::constant(1);
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  const int sz = static_cast<int>(rep.size());
  for (;;) {
    emit();
    int i = n - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == sz - n + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return acc;
}

// Direct Fock-space enumeration: walk all occupation bitmasks over the
// creation operators, group by occupation number, and accumulate the
// accumulated-weight monomials.  Entry n must equal Alt_n of the
// one-particle weights.
inline std::vector<LaurentPoly> direct_sector_trace(const WeightedRep& rep) {
  const std::size_t m = rep.size();
  if (m > 20) throw SizeGuard("direct_sector_trace: basis exceeds 2^20 states");
  std::vector<LaurentPoly> sectors(m + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    Monomial w{0, 0, 0, 0, 0};
    int occ = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        ++occ;
        for (std::size_t v = 0; v < kNumVars; ++v) w[v] += rep.weights[i][v];
      }
    }
    sectors[static_cast<std::size_t>(occ)].add_term(w, 1);
  }
  return sectors;
}

}  // namespace oracle
}  // namespace repchar
