#pragma once

#include <map>
#include <stdexcept>

#include "repchar/laurent.hpp"

namespace repchar {

class NotUSymmetric : public std::runtime_error {
 public:
  explicit NotUSymmetric(const std::string& what) : std::runtime_error(what) {}
};

// chi^{SU(2)}_n = u^{-n} + u^{-n+1} + ... + u^n, the trace of e^{iyg}
// over the spin-n representation.  Integer spins only: the adjoint
// action of SU(2) gives integer eigenvalues, and the pipeline's
// sectors run n = 0..8.
inline LaurentPoly su2_character(int n) {
  if (n < 0) throw std::invalid_argument("su2_character: negative spin");
  LaurentPoly p;
  for (int k = -n; k <= n; ++k) p.add_term(Monomial{0, 0, 0, 0, k}, 1);
  return p;
}

// u^n + u^{-n}; equals su2_character(n) - su2_character(n-1).
inline LaurentPoly cosine_pair(int n) {
  if (n < 1) throw std::invalid_argument("cosine_pair: n must be >= 1");
  LaurentPoly p;
  p.add_term(Monomial{0, 0, 0, 0, n}, 1);
  p.add_term(Monomial{0, 0, 0, 0, -n}, 1);
  return p;
}

// Write a u-inversion-symmetric polynomial as sum_n chi^{SU(2)}_n * c_n
// with u-free coefficients c_n, peeling from the highest u-power down.
inline std::map<int, LaurentPoly> split_by_spin(const LaurentPoly& p) {
  LaurentPoly rem = p;
  std::map<int, LaurentPoly> out;
  for (;;) {
    int top = 0;
    bool any = false;
    for (const auto& [m, c] : rem.terms()) {
      any = true;
      top = std::max(top, m[4] < 0 ? -m[4] : m[4]);
    }
    if (!any) break;
    // coefficient polynomial of u^top
    LaurentPoly coef;
    for (const auto& [m, c] : rem.terms()) {
      if (m[4] == top) coef.add_term(Monomial{m[0], m[1], m[2], m[3], 0}, c);
    }
    rem -= su2_character(top) * coef;
    // A residue at |u-degree| >= top means p was not u-symmetric.
    for (const auto& [m, c] : rem.terms()) {
      if (m[4] >= top || m[4] <= -top)
        throw NotUSymmetric("split_by_spin: input not symmetric under u -> 1/u");
    }
    if (!coef.is_zero()) out[top] += coef;
  }
  return out;
}

}  // namespace repchar
