#include <catch2/catch_amalgamated.hpp>

#include "repchar/pipeline.hpp"
#include "repchar/su2.hpp"

using namespace repchar;

TEST_CASE("chi_theta1") {
  CHECK(evaluate_at_identity(chi_theta1(false)) == 256);
  CHECK(evaluate_at_identity(chi_theta1(true)) == 0);
  CHECK(chi_theta1(false) - chi_theta1(true) ==
        Integer(2) * character(DynkinLabel(1, 0, 0, 1)));
  const IrrepSum sum = decompose(chi_theta1(false));
  REQUIRE(sum.multiplicities.size() == 3);
  CHECK(sum.multiplicities.at(DynkinLabel(2, 0, 0, 0)) == 1);
  CHECK(sum.multiplicities.at(DynkinLabel(0, 0, 1, 0)) == 1);
  CHECK(sum.multiplicities.at(DynkinLabel(1, 0, 0, 1)) == 1);
}

TEST_CASE("sector characters and counts") {
  const SectorCharacters s = sector_characters();
  const Integer expect[kNumSpins] = {183040, 439296, 465920, 326144, 161280,
                                     56320,  13312,  1920,   128};
  for (int n = 0; n < kNumSpins; ++n) {
    const auto i = static_cast<std::size_t>(n);
    CHECK(evaluate_at_identity(s.chi_b[i]) == expect[n]);
    CHECK(evaluate_at_identity(s.chi_f[i]) == expect[n]);
    CHECK(s.chi_b[i] + s.chi_f[i] == s.chi[i]);
  }
  const SectorReport report = sector_report(s);
  CHECK(report.grand_total == 16777216);
}

TEST_CASE("spin regrouping reassembles the direct occupation trace") {
  const SectorCharacters s = sector_characters();
  LaurentPoly lhs, lhs_tilde;
  for (int n = 0; n < kNumSpins; ++n) {
    lhs += su2_character(n) * s.chi[static_cast<std::size_t>(n)];
    lhs_tilde += su2_character(n) * s.chi_tilde[static_cast<std::size_t>(n)];
  }
  CHECK(lhs == chi_theta1(false) * chi_theta_pm_direct(false));
  CHECK(lhs_tilde == chi_theta1(true) * chi_theta_pm_direct(true));
}

TEST_CASE("split_by_spin recovers the sector characters") {
  const SectorCharacters s = sector_characters();
  const auto parts = split_by_spin(chi_theta1(false) * chi_theta_pm_direct(false));
  for (int n = 0; n < kNumSpins; ++n) {
    auto it = parts.find(n);
    REQUIRE(it != parts.end());
    CHECK(it->second == s.chi[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("high-spin sectors decompose and cross-check against pairing") {
  const SectorCharacters s = sector_characters();
  // spin 8: the theta^1 module itself
  const IrrepSum spin8 = decompose(s.chi_b[8] + s.chi_f[8]);
  CHECK(spin8.multiplicities.size() == 3);
  CHECK(inner_product(s.chi[8], character(DynkinLabel(2, 0, 0, 0))) == 1);
  // spin 7 boson and fermion sectors
  for (const LaurentPoly* p : {&s.chi_b[7], &s.chi_f[7]}) {
    const IrrepSum sum = decompose(*p);
    for (const auto& [l, mult] : sum.multiplicities) {
      CHECK(mult > 0);
      CHECK(inner_product(*p, character(l)) == mult);
    }
    CHECK(sum.total_dimension() == 1920);
  }
}

TEST_CASE("verification record on a reduced table") {
  const SectorCharacters s = sector_characters();
  const MultiplicityTable table = full_table(s, 1);
  const VerificationRecord rec = verify_claims(s, table);
  for (const auto& [name, ok] : rec.checks) {
    INFO(name);
    CHECK(ok);
  }
  CHECK(rec.all_passed());
  CHECK(table.weighted_total() == Integer(1) << 24);
}
