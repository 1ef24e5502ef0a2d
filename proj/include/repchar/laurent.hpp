#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <unordered_map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace repchar {

using Integer = boost::multiprecision::cpp_int;

// Exponent vector of one monomial.  Slots 0..3 are the exponents of
// z_i = e^{i x_i / 2} (half-angle convention, so spinor weights are
// integer exponents); slot 4 is the exponent of u = e^{i y}.
using Monomial = std::array<int, 5>;

constexpr std::size_t kNumVars = 5;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded lexicographic order: compare by the signed exponent sum, then
// slot by slot.  Both parts are translation-invariant, which leading-
// term division requires with Laurent exponents; fixing one order
// makes division and peeling deterministic.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class NotDivisible : public std::runtime_error {
 public:
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// Exact multivariate Laurent polynomial over arbitrary-precision
// integers.  Canonical form: no stored coefficient is zero.  Values are
// immutable in spirit; all operations return new polynomials.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer, GradedLexLess>;

  LaurentPoly() = default;

  static LaurentPoly constant(Integer c) {
    LaurentPoly p;
    if (c != 0) p.terms_[Monomial{0, 0, 0, 0, 0}] = std::move(c);
    return p;
  }

  static LaurentPoly monomial(const Monomial& m, Integer c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_[m] = std::move(c);
    return p;
  }

  // z_i^e for i in 1..4, or u^e for i == 5.
  static LaurentPoly variable(int i, int e = 1) {
    Monomial m{0, 0, 0, 0, 0};
    m[static_cast<std::size_t>(i - 1)] = e;
    return monomial(m);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly& add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a.size() >= b.size() ? a : b;
    const LaurentPoly& s = a.size() >= b.size() ? b : a;
    for (const auto& [m, c] : s.terms_) r.add_term(m, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    // Accumulate into a hash map keyed by the packed exponent vector,
    // then rebuild the ordered term map once.  Exponents stay well
    // inside +-2048 throughout this artifact (asserted in pack).
    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(a.size() + b.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (std::size_t i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
        auto [it, inserted] = acc.emplace(pack(m), ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    }
    LaurentPoly r;
    for (auto& [key, c] : acc)
      if (c != 0) r.terms_.emplace(unpack(key), std::move(c));
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const Integer& c) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [m, co] : a.terms_) r.terms_[m] = co * c;
    return r;
  }
  friend LaurentPoly operator*(const Integer& c, const LaurentPoly& a) {
    return a * c;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
  }

 private:
  static std::uint64_t pack(const Monomial& m) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const int e = m[i];
      if (e < -2048 || e > 2047)
        throw std::overflow_error("LaurentPoly: exponent exceeds packing range");
      key = key << 12 | static_cast<std::uint64_t>(e + 2048);
    }
    return key;
  }

  static Monomial unpack(std::uint64_t key) {
    Monomial m;
    for (std::size_t i = kNumVars; i-- > 0;) {
      m[i] = static_cast<int>(key & 0xfff) - 2048;
      key >>= 12;
    }
    return m;
  }

  TermMap terms_;
};

// chi(R^k) from chi(R): every exponent scaled by k.  Valid because all
// group elements here are diagonalized by the chosen torus.
inline LaurentPoly power_substitute(const LaurentPoly& p, int k) {
  if (k < 1) throw std::invalid_argument("power_substitute: k must be >= 1");
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    Monomial s;
    for (std::size_t i = 0; i < kNumVars; ++i) s[i] = m[i] * k;
    r.add_term(s, c);
  }
  return r;
}

// Sum of all coefficients, i.e. the value at z_i = u = 1 (the trace at
// the identity element).
inline Integer evaluate_at_identity(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& [m, c] : p.terms()) s += c;
  return s;
}

// Negate all exponents.  A ring automorphism and an involution;
// characters of self-conjugate reps are fixed points.
inline LaurentPoly conjugate(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    Monomial s;
    for (std::size_t i = 0; i < kNumVars; ++i) s[i] = -m[i];
    r.add_term(s, c);
  }
  return r;
}

inline Integer constant_term(const LaurentPoly& p) {
  return p.coefficient(Monomial{0, 0, 0, 0, 0});
}

// Exact quotient q with q*den == num.  Repeated leading-term
// elimination under graded lex; in the Laurent ring every monomial
// divides every other, so each step extracts the true leading term of
// the quotient.  A step whose quotient monomial leaves the Minkowski
// box of possible quotient exponents proves a nonzero remainder.
inline LaurentPoly exact_divide(const LaurentPoly& num,
                                const LaurentPoly& den) {
  if (den.is_zero()) throw NotDivisible("exact_divide: zero divisor");
  if (num.is_zero()) return LaurentPoly();

  Monomial qlo{}, qhi{};
  for (std::size_t i = 0; i < kNumVars; ++i) {
    int nlo = num.terms().begin()->first[i], nhi = nlo;
    for (const auto& [m, c] : num.terms()) {
      nlo = std::min(nlo, m[i]);
      nhi = std::max(nhi, m[i]);
    }
    int dlo = den.terms().begin()->first[i], dhi = dlo;
    for (const auto& [m, c] : den.terms()) {
      dlo = std::min(dlo, m[i]);
      dhi = std::max(dhi, m[i]);
    }
    qlo[i] = nlo - dhi;
    qhi[i] = nhi - dlo;
  }

  const auto& dlead = *den.terms().rbegin();
  LaurentPoly rem = num;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    Monomial qm;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      qm[i] = rlead.first[i] - dlead.first[i];
      if (qm[i] < qlo[i] || qm[i] > qhi[i])
        throw NotDivisible("exact_divide: nonzero remainder");
    }
    if (rlead.second % dlead.second != 0)
      throw NotDivisible("exact_divide: leading coefficient not divisible");
    Integer qc = rlead.second / dlead.second;
    quot.add_term(qm, qc);
    for (const auto& [m, c] : den.terms()) {
      Monomial s;
      for (std::size_t i = 0; i < kNumVars; ++i) s[i] = m[i] + qm[i];
      rem.add_term(s, -qc * c);
    }
  }
  return quot;
}

// Divide every coefficient by d, throwing if any division is inexact.
inline LaurentPoly exact_scalar_divide(const LaurentPoly& p,
                                       const Integer& d) {
  if (d == 0) throw NotDivisible("exact_scalar_divide: zero divisor");
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (c % d != 0)
      throw NotDivisible("exact_scalar_divide: coefficient not divisible");
    r.add_term(m, c / d);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Textual serialization.  Terms in descending monomial order, each as
// `coef * z1^a z2^b z3^c z4^d u^e` with zero exponents omitted.
// Round-trips exactly.

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  static const char* names[kNumVars] = {"z1", "z2", "z3", "z4", "u"};
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Integer c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    os << c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (it->first[i] != 0) os << " * " << names[i] << "^" << it->first[i];
    }
  }
  return os.str();
}

inline LaurentPoly parse_poly(const std::string& text) {
  LaurentPoly result;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw std::invalid_argument("parse_poly: empty input");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (!first || text[pos] == '+' || text[pos] == '-') {
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
        throw std::invalid_argument("parse_poly: expected +/- between terms");
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    }
    first = false;
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])))) ++pos;
    if (pos == start) throw std::invalid_argument("parse_poly: expected coefficient");
    Integer coef(text.substr(start, pos - start));
    coef *= sign;
    Monomial m{0, 0, 0, 0, 0};
    for (;;) {
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') break;
      ++pos;
      skip_ws();
      int var = -1;
      if (text.compare(pos, 1, "u") == 0) {
        var = 4;
        pos += 1;
      } else if (pos + 1 < text.size() && text[pos] == 'z' &&
                 text[pos + 1] >= '1' && text[pos + 1] <= '4') {
        var = text[pos + 1] - '1';
        pos += 2;
      } else {
        throw std::invalid_argument("parse_poly: expected variable name");
      }
      skip_ws();
      if (pos >= text.size() || text[pos] != '^')
        throw std::invalid_argument("parse_poly: expected ^");
      ++pos;
      skip_ws();
      std::size_t estart = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == estart) throw std::invalid_argument("parse_poly: expected exponent");
      m[static_cast<std::size_t>(var)] = std::stoi(text.substr(estart, pos - estart));
    }
    result.add_term(m, coef);
    skip_ws();
  }
  if (result.is_zero() && text.find('0') == std::string::npos)
    throw std::invalid_argument("parse_poly: no terms");
  return result;
}

}  // namespace repchar
