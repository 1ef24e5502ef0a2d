#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "repchar/laurent.hpp"

namespace repchar {

// Dynkin label [q1,q2,q3,q4] of an SO(9) = B4 irrep.  q4 parity splits
// tensor (even) from spinor (odd) reps.
struct DynkinLabel {
  std::array<int, 4> q{0, 0, 0, 0};

  DynkinLabel() = default;
  DynkinLabel(int q1, int q2, int q3, int q4) : q{q1, q2, q3, q4} {}

  bool is_spinor() const { return q[3] % 2 != 0; }

  auto operator<=>(const DynkinLabel&) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
      if (i) s += ",";
      s += std::to_string(q[i]);
    }
    return s + "]";
  }
};

// Weight in the B4 lattice, stored in half-units so every component is
// an integer (spinor weights have half-integer coordinates).
struct WeightVector {
  std::array<int, 4> half{0, 0, 0, 0};  // 2 * lambda_i

  bool is_dominant() const {
    return half[0] >= half[1] && half[1] >= half[2] && half[2] >= half[3] &&
           half[3] >= 0;
  }
};

// Highest weight of [q1,q2,q3,q4]: q1*mu1 + q2*mu2 + q3*mu3 + q4*mu4
// with mu1=(1,0,0,0), mu2=(1,1,0,0), mu3=(1,1,1,0), mu4=(1/2,...,1/2).
inline WeightVector highest_weight(const DynkinLabel& l) {
  WeightVector w;
  w.half[0] = 2 * (l.q[0] + l.q[1] + l.q[2]) + l.q[3];
  w.half[1] = 2 * (l.q[1] + l.q[2]) + l.q[3];
  w.half[2] = 2 * l.q[2] + l.q[3];
  w.half[3] = l.q[3];
  return w;
}

// Weyl vector rho = (7/2, 5/2, 3/2, 1/2) in half-units.
inline WeightVector weyl_vector() {
  WeightVector w;
  w.half = {7, 5, 3, 1};
  return w;
}

// Inverse of highest_weight on dominant weights of the correct parity.
inline DynkinLabel label_from_weight(const WeightVector& w) {
  const int q4 = w.half[3];
  const int t3 = w.half[2] - w.half[3];
  const int t2 = w.half[1] - w.half[2];
  const int t1 = w.half[0] - w.half[1];
  if (t1 % 2 || t2 % 2 || t3 % 2)
    throw std::invalid_argument("label_from_weight: weight not in the root lattice shifted by q4*mu4");
  return DynkinLabel(t1 / 2, t2 / 2, t3 / 2, q4);
}

// Weyl dimension formula specialized to B4: product over positive
// roots e_i, e_i - e_j, e_i + e_j of <lambda+rho, alpha> / <rho, alpha>.
inline Integer dimension(const DynkinLabel& l) {
  for (int qi : l.q)
    if (qi < 0) throw std::invalid_argument("dimension: negative Dynkin label");
  const WeightVector mu = highest_weight(l);
  const WeightVector rho = weyl_vector();
  std::array<int, 4> a;  // 2*(mu + rho)
  for (int i = 0; i < 4; ++i) a[i] = mu.half[i] + rho.half[i];
  const std::array<int, 4>& r = rho.half;

  Integer num = 1, den = 1;
  for (int i = 0; i < 4; ++i) {
    num *= a[i];
    den *= r[i];
    for (int j = i + 1; j < 4; ++j) {
      num *= (a[i] - a[j]) * (a[i] + a[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
  }
  if (num % den != 0)
    throw std::logic_error("dimension: Weyl quotient not integral");
  return num / den;
}

// D_lambda = 16 det[sin(lambda_j x_i)] stored as
// det[z_i^{2 lambda_j} - z_i^{-2 lambda_j}]: the prefactor 16 cancels
// the four 1/(2i) factors from sin, so the coefficients are integers.
inline LaurentPoly weyl_determinant(const WeightVector& lambda) {
  std::array<int, 4> perm{0, 1, 2, 3};
  LaurentPoly d;
  do {
    // sign of the permutation
    int sign = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    LaurentPoly prod = LaurentPoly::constant(sign);
    for (int i = 0; i < 4; ++i) {
      const int e = lambda.half[perm[i]];
      LaurentPoly factor = LaurentPoly::variable(i + 1, e) -
                           LaurentPoly::variable(i + 1, -e);
      prod = prod * factor;
    }
    d += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return d;
}

inline const LaurentPoly& weyl_denominator() {
  static const LaurentPoly d = weyl_determinant(weyl_vector());
  return d;
}

class NotACharacter : public std::runtime_error {
 public:
  explicit NotACharacter(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline WeightVector shifted_weight(const DynkinLabel& l) {
  WeightVector mu = highest_weight(l);
  WeightVector rho = weyl_vector();
  for (int i = 0; i < 4; ++i) mu.half[i] += rho.half[i];
  return mu;
}

}  // namespace detail

// Weyl character formula chi = D_{rho+mu} / D_rho, memoized by label.
// The cache sees concurrent lookups from parallel sector decompositions.
inline LaurentPoly character(const DynkinLabel& l) {
  static std::map<DynkinLabel, LaurentPoly> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly chi =
      exact_divide(weyl_determinant(detail::shifted_weight(l)), weyl_denominator());
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(l, std::move(chi)).first->second;
}

// Decomposition of a genuine character into irreducible multiplicities.
struct IrrepSum {
  std::map<DynkinLabel, Integer> multiplicities;

  Integer total_dimension() const {
    Integer t = 0;
    for (const auto& [l, m] : multiplicities) t += m * dimension(l);
    return t;
  }
};

// Dominant-weight peeling: repeatedly take the graded-lex greatest
// monomial (necessarily a highest weight of some remaining irrep),
// read off its label, and subtract mult * character(label).  Purely
// integer arithmetic; terminates because the leading dominant monomial
// strictly decreases.
inline IrrepSum decompose(const LaurentPoly& p) {
  IrrepSum out;
  LaurentPoly rem = p;
  while (!rem.is_zero()) {
    const auto& lead = *rem.terms().rbegin();
    const Monomial& m = lead.first;
    if (m[4] != 0)
      throw NotACharacter("decompose: input depends on the SU(2) variable u");
    WeightVector w;
    for (int i = 0; i < 4; ++i) w.half[i] = m[static_cast<std::size_t>(i)];
    if (!w.is_dominant())
      throw NotACharacter("decompose: leading monomial " + to_string(LaurentPoly::monomial(m)) +
                          " is not dominant");
    DynkinLabel label;
    try {
      label = label_from_weight(w);
    } catch (const std::invalid_argument&) {
      throw NotACharacter("decompose: leading weight has mixed parity");
    }
    const Integer mult = lead.second;
    if (mult < 0)
      throw NotACharacter("decompose: negative multiplicity for " + label.to_string());
    rem -= mult * character(label);
    out.multiplicities[label] += mult;
  }
  return out;
}

// The orthogonality pairing realized as constant-term extraction:
// <a, b> = constant_term(a * conj(b) * |D_rho|^2) / (2^4 * 4!).
// For genuine characters this is sum_L mult_a(L) * mult_b(L).
inline Integer inner_product(const LaurentPoly& a, const LaurentPoly& b) {
  static const LaurentPoly weight = [] {
    const LaurentPoly& d = weyl_denominator();
    return d * conjugate(d);
  }();
  Integer ct = constant_term(a * conjugate(b) * weight);
  const Integer order = 16 * 24;  // |Weyl(B4)| = 2^4 * 4!
  if (ct % order != 0)
    throw std::logic_error("inner_product: pairing not divisible by the Weyl group order");
  return ct / order;
}

}  // namespace repchar
