#pragma once

// Closed-form component/cusp predictors for the classical families, the
// multiplication-by-2 shortcut for odd level, and genus computation via
// counting on the coset space G \ SL2(Z/N).

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "xigraph/groups.hpp"
#include "xigraph/xicore.hpp"

namespace xigraph {

enum class PredictTag { gamma_plus, gamma_minus, gamma1, gamma0, split };

struct FamilyPrediction {
  PredictTag family;
  uint32_t level = 0;
  uint64_t components = 0;  // pi_0
  uint64_t cusps = 0;       // p
  uint64_t elliptic = 0;    // e
};

// Case-by-case formulas for X+(N), X-(N), X1(N), X0(N), implemented
// verbatim including the small-N special cases.  SPLIT has no closed form.
inline FamilyPrediction predict(PredictTag family, uint32_t n) {
  if (n == 0) throw std::invalid_argument("predict: N must be >= 1");
  FamilyPrediction out;
  out.family = family;
  out.level = n;
  uint32_t np = n;
  int r = 0;
  while (np % 2 == 0) {
    np /= 2;
    ++r;
  }
  switch (family) {
    case PredictTag::gamma_plus: {
      if (n == 1) return {family, n, 1, 1, 1};
      out.elliptic = 0;
      out.cusps = phi(n) * (r == 0 ? 1 : (r == 1 && n != 2) ? 3 : 2);
      out.components = r == 0 ? psi(n) : n == 2 ? 1 : phi(n) / 2;
      return out;
    }
    case PredictTag::gamma_minus: {
      if (n == 1) return {family, n, 1, 1, 1};
      out.elliptic = 0;
      out.cusps = phi(n);
      out.components = r == 0 ? psi(n) : n == 2 ? 1 : phi(n) / 2;
      return out;
    }
    case PredictTag::gamma1: {
      out.elliptic = n <= 2 ? 1 : 0;
      out.cusps = r == 0 ? phi(n) : r == 1 ? 2 * phi(n) : 3 * phi(n) / 2;
      out.components = r <= 1 ? psi(np) : n == 4 ? 1 : phi(n) / 4;
      return out;
    }
    case PredictTag::gamma0: {
      int odd_primes = int(factorize(np).size());
      out.elliptic = n <= 2 ? 1 : 0;
      uint64_t pw = r == 0 ? 1 : r == 1 ? 2 : r == 2 ? 3 : 4;
      out.cusps = (uint64_t(1) << odd_primes) * pw;
      if (np == 1)
        out.components = 1;
      else
        out.components = (uint64_t(1) << (odd_primes - 1)) * (r <= 2 ? 1 : 2);
      return out;
    }
    default:
      throw std::invalid_argument("predict: no closed form for the split family");
  }
}

// Half the number of orbits of [x] -> [2x] on the parabolic vertex classes.
// Valid for odd level without elliptic vertices.
inline uint64_t shortcut_components(const SubgroupSpec& spec, const Conjugation& conj) {
  const RingCtx& R = spec.ring();
  if (R.modulus() % 2 == 0)
    throw std::invalid_argument("shortcut_components: level must be odd");
  XiBuild xi = build_xi_detailed(spec, conj);
  if (xi.elliptic_count > 0)
    throw std::invalid_argument("shortcut_components: elliptic vertices present");
  ParabolicOrbits orbits = parabolic_orbits(spec, conj);
  size_t k = orbits.reps.size();
  std::vector<int> perm(k);
  for (size_t i = 0; i < k; ++i)
    perm[i] = orbits.class_of.at(orbits.reps[i].scaled(2 % R.modulus()).key());
  std::vector<char> seen(k, 0);
  uint64_t cycles = 0;
  for (size_t i = 0; i < k; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = int(i); !seen[j]; j = perm[j]) seen[j] = 1;
  }
  if (cycles % 2 != 0)
    throw std::logic_error("shortcut_components: odd doubling-orbit count");
  return cycles / 2;
}

struct GenusData {
  uint64_t mu = 0;
  uint64_t nu2 = 0;
  uint64_t nu3 = 0;
  uint64_t nu_inf = 0;
  uint64_t g = 0;
};

// g = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2 with mu the PSL index, nu_inf the
// cusp count, and nu2/nu3 the fixed points of right translation by S and T
// on the coset space G \ SL2(Z/N).  Aborts if g is not a non-negative
// integer.
inline GenusData genus(const SubgroupSpec& spec) {
  const RingCtx& R = spec.ring();
  GenusData out;
  uint64_t order = spec.order();
  uint64_t total = sl2_order(R.modulus());
  if (total % order != 0) throw std::logic_error("genus: |G| does not divide |SL2|");
  out.mu = total / order;

  Mat2 s(0, 1, -1, 0, R);   // order 4, order 2 in PSL
  Mat2 t(0, 1, -1, -1, R);  // order 3
  uint64_t fix2 = 0, fix3 = 0;
  enumerate_sl2(R, [&](const Mat2& m) {
    Mat2 mi = m.inv_unimodular();
    if (spec.member(m * s * mi)) ++fix2;
    if (spec.member(m * t * mi)) ++fix3;
  });
  if (fix2 % order != 0 || fix3 % order != 0)
    throw std::logic_error("genus: fixed-point count not divisible by |G|");
  out.nu2 = fix2 / order;
  out.nu3 = fix3 / order;

  std::unordered_set<uint64_t> seen;
  for (const Vec2& v : all_basis_vectors(R)) {
    if (seen.count(v.key())) continue;
    ++out.nu_inf;
    for (const Vec2& w : orbit(spec, v, true)) seen.insert(w.key());
  }

  int64_t g12 = 12 + int64_t(out.mu) - 3 * int64_t(out.nu2) - 4 * int64_t(out.nu3) -
                6 * int64_t(out.nu_inf);
  if (g12 < 0 || g12 % 12 != 0) throw std::logic_error("genus: non-integral genus (counting bug)");
  out.g = uint64_t(g12 / 12);
  return out;
}

struct SplitNu {
  uint64_t nu_inf = 0;
  uint64_t nu2 = 0;
  uint64_t nu3 = 0;
};

// The multiplicative prime-power formulas for nu_inf, nu2, nu3 of the split
// Cartan normalizer.
inline SplitNu split_nu_formulas(uint32_t n) {
  if (n == 0) throw std::invalid_argument("split_nu_formulas: N must be >= 1");
  SplitNu out{1, 1, 1};
  for (auto [p, q] : factorize(n)) {
    uint64_t pe1 = q / p;  // p^{e-1}
    uint64_t vinf = q == 2 ? 2 : pe1 * (p + 1) / 2;
    uint64_t v2;
    if (p == 2)
      v2 = pe1;
    else if (p % 4 == 1)
      v2 = pe1 * ((p - 1) / 2) + 1;
    else
      v2 = pe1 * ((p + 1) / 2);
    uint64_t v3 = p % 3 == 1 ? 1 : 0;
    out.nu_inf *= vinf;
    out.nu2 *= v2;
    out.nu3 *= v3;
  }
  return out;
}

// The split index formula mu = N^2 prod (1 + 1/p)/2.
inline uint64_t split_mu_formula(uint32_t n) {
  uint64_t mu = uint64_t(n) * n;
  for (auto [p, q] : factorize(n)) {
    (void)q;
    mu = mu * (p + 1) / (2 * p);
  }
  return mu;
}

}  // namespace xigraph
