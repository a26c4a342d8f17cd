#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "xigraph/modring.hpp"

using namespace xigraph;

namespace {

// Independent unit count: brute force over representatives.
uint64_t phi_brute(uint32_t n) {
  uint64_t c = 0;
  for (uint32_t a = 0; a < n; ++a)
    if (std::gcd(int64_t(a), int64_t(n)) == 1) ++c;
  return n == 1 ? 1 : c;
}

// |<-1, 2>| inside (Z/n)^x, brute closure.
uint64_t pm2_subgroup_order(uint32_t n) {
  if (n == 1) return 1;
  std::vector<char> in(n, 0);
  std::vector<uint32_t> h = {1};
  in[1] = 1;
  for (size_t i = 0; i < h.size(); ++i)
    for (uint64_t g : {uint64_t(n - 1), uint64_t(2)}) {
      uint32_t v = uint32_t(g * h[i] % n);
      if (!in[v]) {
        in[v] = 1;
        h.push_back(v);
      }
    }
  return h.size();
}

}  // namespace

TEST_CASE("phi agrees with brute force up to 500") {
  for (uint32_t n = 1; n <= 500; ++n) REQUIRE(phi(n) == phi_brute(n));
}

TEST_CASE("phi frozen examples") {
  CHECK(phi(1) == 1);
  CHECK(phi(12) == 4);   // units {1,5,7,11}
  CHECK(phi(120) == 32);
}

TEST_CASE("psi frozen examples and index identity") {
  CHECK(psi(1) == 1);
  CHECK(psi(7) == 1);   // <-1,2> is all of (Z/7)^x
  CHECK(psi(31) == 3);  // 2 has order 5, so <-1,2> has order 10
  for (uint32_t n = 1; n <= 499; n += 2) REQUIRE(psi(n) * pm2_subgroup_order(n) == phi(n));
  CHECK_THROWS_AS(psi(4), std::invalid_argument);
  CHECK_THROWS_AS(psi(120), std::invalid_argument);
}

TEST_CASE("ring context decomposition") {
  RingCtx r12(12);
  CHECK(r12.odd_part() == 3);
  CHECK(r12.two_exponent() == 2);
  CHECK(r12.two_torsion() == 6);
  CHECK(r12.crt_factors() == std::vector<uint32_t>{4, 3});

  RingCtx r120(120);
  CHECK(r120.crt_factors() == std::vector<uint32_t>{8, 3, 5});
  RingCtx r7(7);
  CHECK(r7.crt_factors() == std::vector<uint32_t>{7});
  CHECK_FALSE(r7.has_two_torsion());

  // two-torsion: t + t = 0 and t != 0 whenever r >= 1
  for (uint32_t n = 2; n <= 200; n += 2) {
    RingCtx r(n);
    REQUIRE(r.two_torsion() != 0);
    REQUIRE(r.add(r.two_torsion(), r.two_torsion()) == 0);
    // uniqueness: the only nonzero element killed by 2
    for (uint32_t a = 1; a < n; ++a)
      if (r.add(a, a) == 0) REQUIRE(a == r.two_torsion());
  }
}

TEST_CASE("crt split and round trip") {
  for (uint32_t n = 1; n <= 200; ++n) {
    RingCtx r(n);
    auto parts_ctx = crt_split(r);
    uint64_t prod = 1;
    for (const auto& c : parts_ctx) prod *= c.modulus();
    REQUIRE(prod == (n == 1 ? 1u : n));
    for (uint32_t v : {uint32_t(0), uint32_t(1), n / 2, n - 1}) {
      uint32_t vv = v % n;
      std::vector<uint32_t> parts;
      for (const auto& c : parts_ctx) parts.push_back(vv % c.modulus());
      REQUIRE(crt_lift(r, parts) == vv);
    }
  }
}

TEST_CASE("residue arithmetic reduces eagerly") {
  RingCtx r(10);
  Residue a(7, r), b(8, r);
  CHECK((a + b).value == 5);
  CHECK((a * b).value == 6);
  CHECK((-a).value == 3);
  CHECK((a - b).value == 9);
  CHECK(Residue(3, r).inverse().value == 7);
  CHECK_THROWS_AS(Residue(5, r).inverse(), std::invalid_argument);
  CHECK(Residue(-3, r).value == 7);
}
