#pragma once

#include <array>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "repchar/frobenius.hpp"
#include "repchar/laurent.hpp"
#include "repchar/su2.hpp"
#include "repchar/weyl_b4.hpp"

namespace repchar {

constexpr int kNumSpins = 9;  // SU(2) sectors n = 0..8

// Character of the 256-dimensional Clifford module built by the eight
// theta^1 creation operators: chi_[2000] + chi_[0010] + chi_[1001],
// and with tilde (the (-1)^F-weighted trace) the vector-spinor enters
// with a minus sign.
inline LaurentPoly chi_theta1(bool tilde) {
  LaurentPoly p = character(DynkinLabel(2, 0, 0, 0)) +
                  character(DynkinLabel(0, 0, 1, 0));
  const LaurentPoly vs = character(DynkinLabel(1, 0, 0, 1));
  return tilde ? p - vs : p + vs;
}

// The theta^± trace assembled directly over occupation sectors: the
// n-particle sector carries e^{i(8-n)y} and the character of
// Alt_n(spinor).  Used as the secondary construction in the
// reconstruction cross-check.
inline LaurentPoly chi_theta_pm_direct(bool tilde) {
  const auto& alt = alt_spinor_table();
  LaurentPoly total;
  for (int n = 0; n <= 7; ++n) {
    LaurentPoly c = cosine_pair(8 - n) * alt[static_cast<std::size_t>(n)];
    if (tilde && n % 2) c = -c;
    total += c;
  }
  total += alt[8];
  return total;
}

// The nine spin-sector SO(9) characters and their boson/fermion split.
struct SectorCharacters {
  std::array<LaurentPoly, kNumSpins> chi;        // chi^{SO(9)}_n
  std::array<LaurentPoly, kNumSpins> chi_tilde;  // tilde version
  std::array<LaurentPoly, kNumSpins> chi_b;      // boson contribution
  std::array<LaurentPoly, kNumSpins> chi_f;      // fermion contribution
};

inline SectorCharacters sector_characters() {
  SectorCharacters s;
  const auto& alt = alt_spinor_table();
  const LaurentPoly t1 = chi_theta1(false);
  const LaurentPoly t1t = chi_theta1(true);
  for (int n = 0; n < kNumSpins; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (n == 8) {
      s.chi[i] = t1;
      s.chi_tilde[i] = t1t;
    } else {
      s.chi[i] = t1 * (alt[static_cast<std::size_t>(8 - n)] -
                       alt[static_cast<std::size_t>(7 - n)]);
      LaurentPoly t = t1t * (alt[static_cast<std::size_t>(8 - n)] +
                             alt[static_cast<std::size_t>(7 - n)]);
      s.chi_tilde[i] = n % 2 ? -t : t;
    }
    s.chi_b[i] = exact_scalar_divide(s.chi[i] + s.chi_tilde[i], 2);
    s.chi_f[i] = exact_scalar_divide(s.chi[i] - s.chi_tilde[i], 2);
  }
  return s;
}

struct TableRow {
  Integer dimension;
  std::array<Integer, kNumSpins> multiplicities{};
  bool fermionic = false;
};

// The headline output: one row per SO(9) irrep occurring anywhere in
// the 2^24-dimensional space, with its per-spin multiplicities.
struct MultiplicityTable {
  std::map<DynkinLabel, TableRow> rows;

  // sum over rows of dim * mult * (2n+1)
  Integer weighted_total() const {
    Integer t = 0;
    for (const auto& [l, row] : rows)
      for (int n = 0; n < kNumSpins; ++n)
        t += row.dimension * row.multiplicities[static_cast<std::size_t>(n)] *
             (2 * n + 1);
    return t;
  }
};

namespace detail {

inline void merge_sector(MultiplicityTable& table, const IrrepSum& sum,
                         int spin, bool fermionic) {
  for (const auto& [label, mult] : sum.multiplicities) {
    if (label.is_spinor() != fermionic)
      throw NotACharacter("sector decomposition violates q4 parity purity: " +
                          label.to_string());
    TableRow& row = table.rows[label];
    if (row.dimension == 0) {
      row.dimension = dimension(label);
      row.fermionic = label.is_spinor();
    }
    row.multiplicities[static_cast<std::size_t>(spin)] += mult;
  }
}

}  // namespace detail

// Decompose all 18 sector polynomials.  Sectors are independent, so
// they are distributed over up to `parallel` worker threads; the merge
// happens single-threaded afterwards, so the result does not depend on
// the worker count.
inline MultiplicityTable full_table(const SectorCharacters& s,
                                    int parallel = 0) {
  if (parallel <= 0)
    parallel = static_cast<int>(std::thread::hardware_concurrency());
  if (parallel < 1) parallel = 1;

  struct Task {
    const LaurentPoly* poly;
    int spin;
    bool fermionic;
  };
  std::vector<Task> tasks;
  for (int n = 0; n < kNumSpins; ++n) {
    tasks.push_back({&s.chi_b[static_cast<std::size_t>(n)], n, false});
    tasks.push_back({&s.chi_f[static_cast<std::size_t>(n)], n, true});
  }

  std::vector<IrrepSum> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < tasks.size(); i += stride) {
      try {
        results[i] = decompose(*tasks[i].poly);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto nworkers =
      std::min<std::size_t>(static_cast<std::size_t>(parallel), tasks.size());
  if (nworkers <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nworkers; ++w)
      pool.emplace_back(worker, w, nworkers);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  MultiplicityTable table;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    detail::merge_sector(table, results[i], tasks[i].spin, tasks[i].fermionic);
  return table;
}

inline MultiplicityTable full_table(int parallel = 0) {
  return full_table(sector_characters(), parallel);
}

// Per-spin boson/fermion state counts and the 2^24 checksum.
struct SectorReport {
  std::array<Integer, kNumSpins> boson_count{};
  std::array<Integer, kNumSpins> fermion_count{};
  Integer grand_total = 0;
};

inline SectorReport sector_report(const SectorCharacters& s) {
  SectorReport r;
  for (int n = 0; n < kNumSpins; ++n) {
    const auto i = static_cast<std::size_t>(n);
    r.boson_count[i] = evaluate_at_identity(s.chi_b[i]);
    r.fermion_count[i] = evaluate_at_identity(s.chi_f[i]);
    r.grand_total += (r.boson_count[i] + r.fermion_count[i]) * (2 * n + 1);
  }
  return r;
}

inline SectorReport sector_report() { return sector_report(sector_characters()); }

// Named consistency checks against the structural claims the table
// supports: singlet content, vector content, absence of an invariant
// spinor, boson/fermion balance, and q4 parity purity.
struct VerificationRecord {
  std::vector<std::pair<std::string, bool>> checks;

  bool all_passed() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

inline VerificationRecord verify_claims(const SectorCharacters& s,
                                        const MultiplicityTable& table) {
  VerificationRecord rec;
  auto check = [&](const std::string& name, bool ok) {
    rec.checks.emplace_back(name, ok);
  };

  auto row_mults = [&](const DynkinLabel& l) {
    std::array<Integer, kNumSpins> m{};
    auto it = table.rows.find(l);
    if (it != table.rows.end()) m = it->second.multiplicities;
    return m;
  };

  const auto singlet = row_mults(DynkinLabel(0, 0, 0, 0));
  bool singlet_ok = true;
  for (int n = 0; n < kNumSpins; ++n) {
    const Integer want = (n == 0 || n == 6) ? 1 : 0;
    if (singlet[static_cast<std::size_t>(n)] != want) singlet_ok = false;
  }
  check("singlet row is spin 0 and spin 6, once each", singlet_ok);
  check("SO(9)xSU(2) singlet is unique", singlet[0] == 1);

  const auto vec = row_mults(DynkinLabel(1, 0, 0, 0));
  bool vector_ok = true;
  for (int n = 0; n < kNumSpins; ++n) {
    const Integer want = (n == 1 || n == 3 || n == 5 || n == 7) ? 1 : 0;
    if (vec[static_cast<std::size_t>(n)] != want) vector_ok = false;
  }
  check("vector row is spins 1,3,5,7, once each", vector_ok);

  const auto spinor = row_mults(DynkinLabel(0, 0, 0, 1));
  check("no gauge-invariant SO(9) spinor", spinor[0] == 0);

  const SectorReport report = sector_report(s);
  bool balance = true;
  for (int n = 0; n < kNumSpins; ++n)
    if (report.boson_count[static_cast<std::size_t>(n)] !=
        report.fermion_count[static_cast<std::size_t>(n)])
      balance = false;
  check("boson and fermion counts equal in every sector", balance);
  check("grand total is 2^24", report.grand_total == Integer(1) << 24);
  check("table weighted total is 2^24",
        table.weighted_total() == Integer(1) << 24);

  bool parity = true;
  for (const auto& [l, row] : table.rows)
    if (row.fermionic != l.is_spinor()) parity = false;
  check("statistics tags match q4 parity", parity);

  return rec;
}

}  // namespace repchar
