#include <catch2/catch_amalgamated.hpp>

#include "xigraph/families.hpp"
#include "xigraph/tables.hpp"

using namespace xigraph;

TEST_CASE("predict frozen examples") {
  FamilyPrediction x0_120 = predict(PredictTag::gamma0, 120);
  CHECK(x0_120.components == 4);
  CHECK(x0_120.cusps == 16);

  FamilyPrediction x1_31 = predict(PredictTag::gamma1, 31);
  CHECK(x1_31.components == 3);  // psi(31)
  CHECK(x1_31.cusps == 30);

  FamilyPrediction x1_4 = predict(PredictTag::gamma1, 4);
  CHECK(x1_4.components == 1);
  CHECK(x1_4.cusps == 3);

  CHECK(predict(PredictTag::gamma_plus, 8).cusps == 8);
  CHECK(predict(PredictTag::gamma_minus, 8).cusps == 4);
  CHECK(predict(PredictTag::gamma_plus, 8).components == 2);

  CHECK_THROWS_AS(predict(PredictTag::split, 7), std::invalid_argument);
}

TEST_CASE("shortcut examples") {
  RingCtx r7(7);
  CHECK(shortcut_components(family_group(Family::gamma, r7), std_conjugation(r7)) == 1);
  RingCtx r15(15);
  CHECK(shortcut_components(family_group(Family::gamma0, r15), std_conjugation(r15)) == 2);
  RingCtx r31(31);
  CHECK(shortcut_components(family_group(Family::gamma1, r31), std_conjugation(r31)) == 3);

  RingCtx r10(10);
  CHECK_THROWS_AS(shortcut_components(family_group(Family::gamma0, r10), std_conjugation(r10)),
                  std::invalid_argument);
  RingCtx r5(5);
  // split(5) has elliptic vertices, so the shortcut must refuse
  CHECK_THROWS_AS(shortcut_components(family_group(Family::split, r5), std_conjugation(r5)),
                  std::invalid_argument);
}

TEST_CASE("genus frozen examples") {
  RingCtx r1(1);
  GenusData g1 = genus(family_group(Family::full, r1));
  CHECK(g1.mu == 1);
  CHECK(g1.nu2 == 1);
  CHECK(g1.nu3 == 1);
  CHECK(g1.nu_inf == 1);
  CHECK(g1.g == 0);

  RingCtx r120(120);
  CHECK(genus(family_group(Family::gamma0, r120)).g == 17);

  RingCtx r100(100);
  GenusData gs = genus(family_group(Family::split, r100));
  CHECK(gs.g == 348);
}

TEST_CASE("split nu formulas") {
  CHECK(split_nu_formulas(2).nu_inf == 2);
  CHECK(split_nu_formulas(5).nu2 == 3);
  for (uint32_t n = 1; n <= 100; ++n) {
    RingCtx R(n);
    GenusData gd = genus(family_group(Family::split, R));
    SplitNu nu = split_nu_formulas(n);
    REQUIRE(nu.nu_inf == gd.nu_inf);
    REQUIRE(nu.nu2 == gd.nu2);
    REQUIRE(nu.nu3 == gd.nu3);
    REQUIRE(split_mu_formula(n) == gd.mu);
  }
}

TEST_CASE("predictors match computed graphs on a sample") {
  for (uint32_t n = 1; n <= 24; ++n) {
    RingCtx R(n);
    {
      TableRow row = compute_table_row("x0", n, false);
      FamilyPrediction pr = predict(PredictTag::gamma0, n);
      REQUIRE(pr.components == row.pi0);
      REQUIRE(pr.cusps == row.p);
      REQUIRE(pr.elliptic == row.e);
    }
    {
      TableRow row = compute_table_row("x1", n, false);
      FamilyPrediction pr = predict(PredictTag::gamma1, n);
      REQUIRE(pr.components == row.pi0);
      REQUIRE(pr.cusps == row.p);
    }
    if (n != 2) {  // the N=2 cusp count of X+ is a known discrepancy
      TableRow row = compute_table_row("xpm", n, false);
      FamilyPrediction plus = predict(PredictTag::gamma_plus, n);
      FamilyPrediction minus = predict(PredictTag::gamma_minus, n);
      REQUIRE(plus.components == row.pi0);
      REQUIRE(plus.cusps == row.p);
      REQUIRE(minus.cusps == row.p_minus);
    }
  }
}

TEST_CASE("x plus and x minus have equal component counts") {
  for (uint32_t n = 2; n <= 60; ++n) {
    RingCtx R(n);
    SubgroupSpec gam = family_group(Family::gamma, R);
    ModularGraph plus = build_xi(gam, std_conjugation(R));
    ModularGraph minus = build_xi(gam, inv_conjugation(R));
    REQUIRE(component_stats(plus).size() == component_stats(minus).size());
    if (n % 2 == 0 && n > 2) REQUIRE_FALSE(isomorphic(plus, minus));
  }
}

TEST_CASE("verification is deterministic across parallelism levels") {
  auto one = verify_against_gold("xsplit", 30, true, 1);
  auto four = verify_against_gold("xsplit", 30, true, 4);
  REQUIRE(one.size() == four.size());
  for (size_t i = 0; i < one.size(); ++i) REQUIRE(one[i].str() == four[i].str());
  auto r1 = compute_table("x1", 1, 30, false, 1);
  auto r3 = compute_table("x1", 1, 30, false, 3);
  for (size_t i = 0; i < r1.size(); ++i) {
    REQUIRE(r1[i].pi0 == r3[i].pi0);
    REQUIRE(r1[i].p == r3[i].p);
  }
}

TEST_CASE("gold verification harness flags a perturbed cell") {
  auto gold = gold_table("x1");
  gold.resize(20);
  std::vector<TableRow> computed = compute_table("x1", 1, 20);
  CHECK(diff_against_gold("x1", gold, computed, true).empty());

  // perturb one cell and expect exactly that mismatch to be named
  gold[14].p += 1;  // N = 15
  auto mism = diff_against_gold("x1", gold, computed, true);
  REQUIRE(mism.size() == 1);
  CHECK(mism[0].n == 15);
  CHECK(mism[0].column == "p");
  CHECK(mism[0].expected == gold[14].p);
}
