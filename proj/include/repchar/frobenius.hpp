#pragma once

#include <array>
#include <vector>

#include "repchar/laurent.hpp"
#include "repchar/weyl_b4.hpp"

namespace repchar {

class NotIntegral : public std::runtime_error {
 public:
  explicit NotIntegral(const std::string& what) : std::runtime_error(what) {}
};

// All solutions {i_k >= 0 : sum_k k*i_k = n}, i.e. partitions of n by
// cycle-type multiplicity vector, in a deterministic order.  Entry k-1
// of each vector is i_k.
inline std::vector<std::vector<int>> partitions_with_multiplicity(int n) {
  if (n < 0) throw std::invalid_argument("partitions_with_multiplicity: n < 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  // Fill multiplicities from the largest part down.
  auto rec = [&](auto&& self, int remaining, int k) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (k < 1) return;
    for (int i = remaining / k; i >= 0; --i) {
      cur[static_cast<std::size_t>(k - 1)] = i;
      self(self, remaining - i * k, k - 1);
    }
    cur[static_cast<std::size_t>(k - 1)] = 0;
  };
  rec(rec, n, n);
  return out;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// n! * chi(Alt_n) as an integer combination of the power traces
// chi_k = chi(R^k).  The coefficient of each cycle type,
// n!/(prod i_k! k^{i_k}), is the number of permutations of that type.
// With fermionic_sign the overall factor is (-1)^{sum i_k} instead of
// (-1)^{n + sum i_k}, the variant for states counted with minus sign.
inline LaurentPoly alt_numerator(const std::vector<LaurentPoly>& power_traces,
                                 int n, bool fermionic_sign = false) {
  if (n == 0) return LaurentPoly::constant(1);
  if (static_cast<int>(power_traces.size()) < n)
    throw std::invalid_argument("alt_numerator: need power traces up to n");
  const Integer nfact = factorial(n);
  LaurentPoly acc;
  for (const auto& type : partitions_with_multiplicity(n)) {
    Integer coef = nfact;
    int parts = 0;
    for (int k = 1; k <= n; ++k) {
      const int ik = type[static_cast<std::size_t>(k - 1)];
      parts += ik;
      for (int r = 0; r < ik; ++r) coef /= Integer(k) * (r + 1);
    }
    const int sign_exp = fermionic_sign ? parts : n + parts;
    if (sign_exp % 2) coef = -coef;
    LaurentPoly term = LaurentPoly::constant(coef);
    for (int k = 1; k <= n; ++k) {
      const int ik = type[static_cast<std::size_t>(k - 1)];
      for (int r = 0; r < ik; ++r)
        term = term * power_traces[static_cast<std::size_t>(k - 1)];
    }
    acc += term;
  }
  return acc;
}

// chi(Alt_n(R)) by the Frobenius formula.  Accumulates the n!-scaled
// integer combination, then divides, asserting exact integrality.
// chi_k^{i_k} is realized as power_substitute(base^{i_k}, k), reusing
// one incrementally-built table of base powers across all cycle types.
inline LaurentPoly alt_character(const LaurentPoly& base, int n,
                                 bool fermionic_sign = false) {
  if (n < 0) throw std::invalid_argument("alt_character: n < 0");
  if (n == 0) return LaurentPoly::constant(1);
  std::vector<LaurentPoly> base_pow(static_cast<std::size_t>(n) + 1);
  base_pow[0] = LaurentPoly::constant(1);
  for (int i = 1; i <= n; ++i)
    base_pow[static_cast<std::size_t>(i)] =
        base_pow[static_cast<std::size_t>(i - 1)] * base;

  const Integer nfact = factorial(n);
  LaurentPoly acc;
  for (const auto& type : partitions_with_multiplicity(n)) {
    Integer coef = nfact;
    int parts = 0;
    LaurentPoly term = LaurentPoly::constant(1);
    for (int k = 1; k <= n; ++k) {
      const int ik = type[static_cast<std::size_t>(k - 1)];
      if (ik == 0) continue;
      parts += ik;
      for (int r = 0; r < ik; ++r) coef /= Integer(k) * (r + 1);
      term = term * power_substitute(base_pow[static_cast<std::size_t>(ik)], k);
    }
    const int sign_exp = fermionic_sign ? parts : n + parts;
    if (sign_exp % 2) coef = -coef;
    acc += term * coef;
  }
  try {
    return exact_scalar_divide(acc, nfact);
  } catch (const NotDivisible&) {
    throw NotIntegral("alt_character: Frobenius sum not divisible by n!");
  }
}

// Character of the 16-dimensional SO(9) spinor, the product
// (z1 + 1/z1)(z2 + 1/z2)(z3 + 1/z3)(z4 + 1/z4).
inline LaurentPoly spinor_character() {
  LaurentPoly p = LaurentPoly::constant(1);
  for (int i = 1; i <= 4; ++i)
    p = p * (LaurentPoly::variable(i, 1) + LaurentPoly::variable(i, -1));
  return p;
}

// chi(Alt_n(spinor)) for n = 0..16.  Entries 0..8 come from the
// Frobenius formula; 9..16 are filled by the reflection identity
// Alt_{16-n} = Alt_n (re-verified by direct Frobenius in the tests).
inline const std::vector<LaurentPoly>& alt_spinor_table() {
  static const std::vector<LaurentPoly> table = [] {
    std::vector<LaurentPoly> t(17);
    const LaurentPoly spinor = spinor_character();
    for (int n = 0; n <= 8; ++n) t[static_cast<std::size_t>(n)] = alt_character(spinor, n);
    for (int n = 9; n <= 16; ++n) t[static_cast<std::size_t>(n)] = t[static_cast<std::size_t>(16 - n)];
    return t;
  }();
  return table;
}

}  // namespace repchar
