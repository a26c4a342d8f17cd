#pragma once

// Named verification suites over the structure theorems: rho algebra,
// union-of-cycles, odd regularity, oracle equivalence, the CRT product
// theorem, inverse-image invariance, the doubling shortcut and the
// class-count identity.  Each suite returns a machine-readable report.

#include <random>
#include <string>
#include <vector>

#include "xigraph/families.hpp"
#include "xigraph/groups.hpp"
#include "xigraph/modgraph.hpp"
#include "xigraph/tables.hpp"
#include "xigraph/xicore.hpp"

namespace xigraph {

struct CheckReport {
  std::string suite;
  size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const {
    return "suite=" + suite + " checks=" + std::to_string(checks) +
           " failures=" + std::to_string(failures.size()) + (ok() ? " ok" : " FAIL");
  }
};

// The family/conjugation pairs for which the group is C-stable.
struct FamilyConj {
  Family family;
  bool inv;  // false: std conjugation
  std::string str() const {
    return std::string(family_name(family)) + "/" + (inv ? "inv" : "std");
  }
};

inline std::vector<FamilyConj> standard_family_conjs() {
  return {{Family::full, false},  {Family::full, true},  {Family::gamma, false},
          {Family::gamma, true},  {Family::split, false}, {Family::split, true},
          {Family::gamma0, false}, {Family::gamma1, false}};
}

inline Conjugation make_conjugation(const RingCtx& R, bool inv) {
  return inv ? inv_conjugation(R) : std_conjugation(R);
}

// Three fixed custom groups used by the oracle suite, given by integer
// det-1 generator matrices interpreted mod N.  The first reduces mod 2 to
// the order-3 element of SL2(Z/2).
inline std::vector<std::vector<std::array<int64_t, 4>>> fixed_custom_generators() {
  return {
      {{1, 1, 1, 2}},
      {{0, 1, -1, 0}},
      {{1, 2, 0, 1}, {2, 1, 1, 1}},
  };
}

// A uniformly random triple satisfying conditions (a)-(b).
inline GeodesicTriple random_triple(const RingCtx& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> dist(0, R.modulus() - 1);
  for (;;) {
    Vec2 x(dist(rng), dist(rng), R);
    if (!x.is_basis_vector()) continue;
    Vec2 u = complete_basis(x);
    int w = 1 + int(rng() % 2);
    Vec2 y = u.scaled(R.reduce(w)) + x.scaled(dist(rng));
    if (!y.is_basis_vector()) continue;
    if (pairing(x, y) != R.reduce(w)) continue;
    auto zs = detail::solve_third_component(x, y, w);
    if (zs.empty()) continue;
    GeodesicTriple t;
    t.x = x;
    t.y = y;
    t.z = zs[rng() % zs.size()];
    t.w = w;
    return t;
  }
}

// rho has order 8, rho^4 is negation, rho swaps the weights, and
// rho^2([x,y;z]) = [y,-x;z-w'x].
inline CheckReport check_rho(uint32_t max_n = 20, size_t samples_per_level = 1000,
                             uint64_t seed = 0x5eed) {
  CheckReport rep;
  rep.suite = "rho";
  std::mt19937_64 rng(seed);
  for (uint32_t n = 3; n <= max_n; ++n) {
    RingCtx R(n);
    for (size_t i = 0; i < samples_per_level; ++i) {
      GeodesicTriple t = random_triple(R, rng);
      ++rep.checks;
      GeodesicTriple cur = t;
      for (int k = 0; k < 4; ++k) {
        GeodesicTriple next = rho(cur);
        if (next.w != cur.cw())
          rep.failures.push_back("rho weight swap failed at N=" + std::to_string(n));
        cur = rho(next);
      }
      if (!(cur == t)) rep.failures.push_back("rho^8 != id at N=" + std::to_string(n));
      GeodesicTriple t4 = rho(rho(rho(rho(t))));
      GeodesicTriple neg{-t.x, -t.y, -t.z, t.w, std::nullopt};
      if (!(t4 == neg)) rep.failures.push_back("rho^4 != negation at N=" + std::to_string(n));
      GeodesicTriple t2 = rho(rho(t));
      GeodesicTriple want{t.y, -t.x, t.z - t.x.scaled(uint32_t(t.cw())), t.w, std::nullopt};
      if (!(t2 == want)) rep.failures.push_back("rho^2 formula failed at N=" + std::to_string(n));
      if (rep.failures.size() > 20) return rep;
    }
  }
  return rep;
}

// Union of cycles: every computed Xi passes valence-2 cycle decomposition
// and is non-empty.
inline CheckReport check_cycles(uint32_t max_n = 60) {
  CheckReport rep;
  rep.suite = "cycles";
  for (const FamilyConj& fc : standard_family_conjs()) {
    for (uint32_t n = 1; n <= max_n; ++n) {
      RingCtx R(n);
      SubgroupSpec spec = family_group(fc.family, R);
      try {
        ModularGraph xi = build_xi(spec, make_conjugation(R, fc.inv));
        auto sigs = verify_cyclic(xi);
        ++rep.checks;
        if (sigs.empty())
          rep.failures.push_back(fc.str() + " N=" + std::to_string(n) + ": empty graph");
      } catch (const std::exception& ex) {
        rep.failures.push_back(fc.str() + " N=" + std::to_string(n) + ": " + ex.what());
      }
    }
  }
  return rep;
}

// Odd characteristic: every vertex meets exactly one edge of each weight,
// no loops.
inline CheckReport check_odd_regular(uint32_t max_n = 59) {
  CheckReport rep;
  rep.suite = "odd-regular";
  for (const FamilyConj& fc : standard_family_conjs()) {
    for (uint32_t n = 1; n <= max_n; n += 2) {
      RingCtx R(n);
      SubgroupSpec spec = family_group(fc.family, R);
      ModularGraph xi = build_xi(spec, make_conjugation(R, fc.inv));
      ++rep.checks;
      if (!is_regular(xi))
        rep.failures.push_back(fc.str() + " N=" + std::to_string(n) + ": not regular");
    }
  }
  return rep;
}

// Optimized construction agrees with the brute-force oracle.
inline CheckReport check_oracle(uint32_t max_n = 12) {
  CheckReport rep;
  rep.suite = "oracle";
  auto compare = [&](const SubgroupSpec& spec, const Conjugation& conj, const std::string& tag) {
    ++rep.checks;
    ModularGraph fast = build_xi(spec, conj);
    ModularGraph slow = build_xi_oracle(spec, conj);
    if (!isomorphic(fast, slow)) rep.failures.push_back(tag + ": oracle disagreement");
  };
  for (uint32_t n = 1; n <= max_n; ++n) {
    RingCtx R(n);
    for (const FamilyConj& fc : standard_family_conjs()) {
      SubgroupSpec spec = family_group(fc.family, R);
      compare(spec, make_conjugation(R, fc.inv), fc.str() + " N=" + std::to_string(n));
    }
    int ci = 0;
    for (const auto& gens : fixed_custom_generators()) {
      ++ci;
      for (bool inv : {false, true}) {
        Conjugation conj = make_conjugation(R, inv);
        std::vector<Mat2> mats;
        for (const auto& g : gens) mats.push_back(Mat2(g[0], g[1], g[2], g[3], R));
        SubgroupSpec spec = custom_group(R, mats, conj);
        compare(spec, conj,
                "custom" + std::to_string(ci) + (inv ? "/inv" : "/std") + " N=" + std::to_string(n));
      }
    }
  }
  return rep;
}

// Xi_F(N1 N2) is isomorphic to Xi_F(N1) |x| Xi_F(N2) for the families whose
// groups factor as direct products containing -1 in each factor.
inline CheckReport check_crt(uint32_t max_prod = 60) {
  CheckReport rep;
  rep.suite = "crt";
  for (Family f : {Family::gamma0, Family::split, Family::full}) {
    for (uint32_t n1 = 3; n1 <= max_prod / 2; n1 += 2) {
      for (uint32_t n2 = 2; n1 * n2 <= max_prod; ++n2) {
        if (std::gcd(int64_t(n1), int64_t(n2)) != 1) continue;
        RingCtx R1(n1), R2(n2), R12(n1 * n2);
        ModularGraph xi1 = build_xi(family_group(f, R1), std_conjugation(R1));
        ModularGraph xi2 = build_xi(family_group(f, R2), std_conjugation(R2));
        ModularGraph xi12 = build_xi(family_group(f, R12), std_conjugation(R12));
        ModularGraph prod = product(xi1, xi2);
        ++rep.checks;
        if (!isomorphic(xi12, prod))
          rep.failures.push_back(std::string(family_name(f)) + " N1=" + std::to_string(n1) +
                                 " N2=" + std::to_string(n2) + ": product mismatch");
      }
    }
  }
  return rep;
}

// Xi of the inverse image over Z/(N0*m) is isomorphic to Xi of the base
// group over Z/N0 (valid once 3 and 4 are nonzero in the base ring).
inline CheckReport check_preimage(uint32_t min_base = 5, uint32_t max_base = 12) {
  CheckReport rep;
  rep.suite = "preimage";
  std::vector<FamilyConj> combos = {{Family::full, false},   {Family::gamma, false},
                                    {Family::gamma, true},   {Family::gamma1, false},
                                    {Family::gamma0, false}, {Family::split, false}};
  for (const FamilyConj& fc : combos) {
    for (uint32_t n0 = min_base; n0 <= max_base; ++n0) {
      RingCtx R0(n0);
      SubgroupSpec g0 = family_group(fc.family, R0);
      ModularGraph xi0 = build_xi(g0, make_conjugation(R0, fc.inv));
      for (uint32_t m : {2, 3, 5}) {
        RingCtx R(n0 * m);
        SubgroupSpec g = preimage_group(g0, R);
        ModularGraph xi = build_xi(g, make_conjugation(R, fc.inv));
        ++rep.checks;
        if (!isomorphic(xi, xi0))
          rep.failures.push_back(fc.str() + " N0=" + std::to_string(n0) +
                                 " m=" + std::to_string(m) + ": invariance failed");
      }
    }
  }
  return rep;
}

// Half the doubling-orbit count equals the component count, for odd level
// without elliptic vertices.
inline CheckReport check_shortcut(uint32_t max_n = 99) {
  CheckReport rep;
  rep.suite = "shortcut";
  for (Family f : {Family::gamma, Family::gamma1, Family::gamma0, Family::split}) {
    for (uint32_t n = 3; n <= max_n; n += 2) {
      RingCtx R(n);
      SubgroupSpec spec = family_group(f, R);
      Conjugation conj = std_conjugation(R);
      uint64_t expect = component_stats(build_xi(spec, conj)).size();
      uint64_t got;
      try {
        got = shortcut_components(spec, conj);
      } catch (const std::invalid_argument&) {
        continue;  // elliptic vertices present: the shortcut does not apply
      }
      ++rep.checks;
      if (got != expect)
        rep.failures.push_back(std::string(family_name(f)) + " N=" + std::to_string(n) +
                               ": shortcut=" + std::to_string(got) +
                               " pi0=" + std::to_string(expect));
    }
  }
  return rep;
}

// Number of G-inequivalent geodesic classes equals the number of vertices.
inline CheckReport check_count_identity(uint32_t max_x0 = 120, uint32_t max_x1 = 100,
                                        uint32_t max_xpm = 60, uint32_t max_xsplit = 100) {
  CheckReport rep;
  rep.suite = "count-identity";
  auto run = [&](Family f, bool inv, uint32_t max_n, const std::string& tag) {
    for (uint32_t n = 1; n <= max_n; ++n) {
      RingCtx R(n);
      XiBuild xi = build_xi_detailed(family_group(f, R), make_conjugation(R, inv));
      ++rep.checks;
      if (xi.geodesic_class_count != xi.graph.vertices.size())
        rep.failures.push_back(tag + " N=" + std::to_string(n) + ": classes=" +
                               std::to_string(xi.geodesic_class_count) +
                               " vertices=" + std::to_string(xi.graph.vertices.size()));
    }
  };
  run(Family::gamma0, false, max_x0, "x0");
  run(Family::gamma1, false, max_x1, "x1");
  run(Family::gamma, false, max_xpm, "xpm+");
  run(Family::gamma, true, max_xpm, "xpm-");
  run(Family::split, false, max_xsplit, "xsplit");
  return rep;
}

inline CheckReport run_check_suite(const std::string& name, uint32_t max_n) {
  if (name == "rho") return check_rho(max_n == 0 ? 20 : max_n);
  if (name == "cycles") return check_cycles(max_n == 0 ? 60 : max_n);
  if (name == "odd-regular") return check_odd_regular(max_n == 0 ? 59 : max_n);
  if (name == "oracle") return check_oracle(max_n == 0 ? 12 : max_n);
  if (name == "crt") return check_crt(max_n == 0 ? 60 : max_n);
  if (name == "preimage") return check_preimage();
  if (name == "shortcut") return check_shortcut(max_n == 0 ? 99 : max_n);
  if (name == "count-identity") {
    if (max_n == 0) return check_count_identity();
    return check_count_identity(max_n, max_n, max_n, max_n);
  }
  throw std::invalid_argument("unknown check suite: " + name);
}

}  // namespace xigraph
