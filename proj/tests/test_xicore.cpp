#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "xigraph/checks.hpp"
#include "xigraph/xicore.hpp"

using namespace xigraph;

TEST_CASE("rho frozen example at N=5") {
  RingCtx R(5);
  GeodesicTriple t;
  t.x = Vec2(1, 0, R);
  t.y = Vec2(0, 1, R);
  t.z = Vec2(1, 1, R);
  t.w = 1;
  GeodesicTriple r = rho(t);
  CHECK(r.x == Vec2(1, 1, R));
  CHECK(r.y == Vec2(4, 1, R));  // (-1, 1)
  CHECK(r.z == Vec2(0, 1, R));
  CHECK(r.w == 2);
}

TEST_CASE("rho algebra on random triples") {
  CheckReport rep = check_rho(12, 200);
  INFO((rep.failures.empty() ? std::string() : rep.failures.front()));
  CHECK(rep.ok());
  CHECK(rep.checks >= 2000);
}

TEST_CASE("parabolic classes for the gamma family") {
  RingCtx R(5);
  SubgroupSpec gam = family_group(Family::gamma, R);
  auto reps = parabolic_classes(gam, std_conjugation(R));
  // (a,0) and (0,a) with a a unit, mod +-1
  CHECK(reps == std::vector<Vec2>{Vec2(0, 1, R), Vec2(0, 2, R), Vec2(1, 0, R), Vec2(2, 0, R)});

  RingCtx R4(4);
  SubgroupSpec gam4 = family_group(Family::gamma, R4);
  auto reps4 = parabolic_classes(gam4, inv_conjugation(R4));
  CHECK(reps4 == std::vector<Vec2>{Vec2(1, 1, R4), Vec2(1, 3, R4)});
}

TEST_CASE("full group has one parabolic class") {
  for (uint32_t n = 1; n <= 12; ++n) {
    RingCtx R(n);
    SubgroupSpec full = family_group(Family::full, R);
    CHECK(parabolic_classes(full, std_conjugation(R)).size() == 1);
  }
}

TEST_CASE("geodesics at a vertex of X+(5)") {
  RingCtx R(5);
  SubgroupSpec gam = family_group(Family::gamma, R);
  Conjugation c0 = std_conjugation(R);
  auto geos = geodesics_at(Vec2(1, 0, R), gam, c0);
  REQUIRE(geos.size() == 2);
  // weight 1 to (0,1) = (0,b), weight 2 to (0,2) = (0,2b), with b = 1
  CHECK(geos[0].w == 1);
  CHECK(geos[0].y == Vec2(0, 1, R));
  CHECK(geos[0].z == Vec2(1, 1, R));
  CHECK(geos[1].w == 2);
  CHECK(geos[1].y == Vec2(0, 2, R));
  CHECK(geos[1].z == Vec2(3, 1, R));
  for (const auto& t : geos) {
    REQUIRE(t.witness.has_value());
    REQUIRE(is_admissible(*t.witness, c0));
    Mat2 cg = c0.c * *t.witness;
    CHECK(cg * t.x == t.x);
    CHECK(cg * t.y == -t.y);
  }
}

TEST_CASE("witnesses satisfy both rank-one identities") {
  // Cg - 1 = w'<-,x>y and Cg + 1 = w'<-,y>x, entrywise
  for (uint32_t n : {2u, 3u, 4u, 5u, 8u, 12u}) {
    RingCtx R(n);
    for (Family f : {Family::gamma, Family::gamma0, Family::split}) {
      SubgroupSpec spec = family_group(f, R);
      Conjugation conj = std_conjugation(R);
      for (const Vec2& rep : parabolic_classes(spec, conj)) {
        for (const GeodesicTriple& t : geodesics_at(rep, spec, conj)) {
          REQUIRE(t.witness.has_value());
          Mat2 cg = conj.c * *t.witness;
          uint32_t wc = R.reduce(t.cw());
          const Vec2 &x = t.x, &y = t.y;
          // columns of v -> w'<v,x>y are w'*x2*y and -w'*x1*y
          CHECK(cg.m[0] == R.add(R.reduce(1), R.mul(wc, R.mul(x.b, y.a))));
          CHECK(cg.m[1] == R.mul(wc, R.mul(R.neg(x.a), y.a)));
          CHECK(cg.m[2] == R.mul(wc, R.mul(x.b, y.b)));
          CHECK(cg.m[3] == R.add(R.reduce(1), R.mul(wc, R.mul(R.neg(x.a), y.b))));
          CHECK(cg.m[0] == R.sub(R.mul(wc, R.mul(y.b, x.a)), R.reduce(1)));
          CHECK(cg.m[1] == R.mul(wc, R.mul(R.neg(y.a), x.a)));
          CHECK(cg.m[2] == R.mul(wc, R.mul(y.b, x.b)));
          CHECK(cg.m[3] == R.sub(R.mul(wc, R.mul(R.neg(y.a), x.b)), R.reduce(1)));
        }
      }
    }
  }
}

TEST_CASE("odd level: one geodesic of each weight at every parabolic vertex") {
  for (uint32_t n : {3u, 5u, 7u, 9u, 15u}) {
    RingCtx R(n);
    for (Family f : {Family::gamma, Family::gamma1, Family::gamma0, Family::split}) {
      SubgroupSpec spec = family_group(f, R);
      Conjugation conj = std_conjugation(R);
      for (const Vec2& rep : parabolic_classes(spec, conj)) {
        auto geos = geodesics_at(rep, spec, conj);
        bool w1 = false, w2 = false;
        for (const auto& t : geos) (t.w == 1 ? w1 : w2) = true;
        REQUIRE(w1);
        REQUIRE(w2);
      }
    }
  }
}

TEST_CASE("intersections") {
  // full group at N=1: the two geodesics through the unique vertex intersect
  RingCtx R1(1);
  SubgroupSpec full1 = family_group(Family::full, R1);
  Conjugation c1 = std_conjugation(R1);
  auto geos = geodesics_at(Vec2(0, 0, R1), full1, c1);
  REQUIRE(geos.size() == 2);
  GeodesicClass cls{canonical_triple(geos[0])};
  auto partner = intersects(cls, full1);
  REQUIRE(partner.has_value());
  CHECK(partner->rep.w == 3 - geos[0].w);

  // Gamma0(5), std: no intersections at all (no real elliptic points)
  RingCtx R5(5);
  SubgroupSpec g05 = family_group(Family::gamma0, R5);
  Conjugation c05 = std_conjugation(R5);
  for (const Vec2& rep : parabolic_classes(g05, c05))
    for (const auto& t : geodesics_at(rep, g05, c05))
      CHECK_FALSE(intersects(GeodesicClass{canonical_triple(t)}, g05).has_value());
}

TEST_CASE("build_xi matches the worked small cases") {
  SECTION("identity graph at N=1") {
    RingCtx R(1);
    XiBuild xi = build_xi_detailed(family_group(Family::full, R), std_conjugation(R));
    auto stats = component_stats(xi.graph);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].parabolic == 1);
    CHECK(stats[0].elliptic == 1);
    CHECK(stats[0].weights == std::vector<int>{1, 2});
  }
  SECTION("gamma1 at N=4: one 3-cycle with weights 1,1,2") {
    RingCtx R(4);
    ModularGraph xi = build_xi(family_group(Family::gamma1, R), std_conjugation(R));
    auto stats = component_stats(xi);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].parabolic == 3);
    CHECK(stats[0].elliptic == 0);
    CHECK(stats[0].weights == std::vector<int>{1, 1, 2});
  }
  SECTION("gamma0 at N=2: two cusps and one elliptic vertex") {
    RingCtx R(2);
    ModularGraph xi = build_xi(family_group(Family::gamma0, R), std_conjugation(R));
    auto stats = component_stats(xi);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].parabolic == 2);
    CHECK(stats[0].elliptic == 1);
    CHECK(stats[0].weights == std::vector<int>{1, 1, 2});
  }
  SECTION("the order-3 custom group at N=2: a single weight-1 loop") {
    RingCtx R(2);
    Conjugation c0 = std_conjugation(R);
    SubgroupSpec spec = custom_group(R, {Mat2(1, 1, 1, 0, R)}, c0);
    ModularGraph xi = build_xi(spec, c0);
    REQUIRE(xi.vertices.size() == 1);
    CHECK(xi.vertices[0].kind == VertexKind::parabolic);
    REQUIRE(xi.edge_count() == 1);
    CHECK(xi.is_loop(0));
    CHECK(xi.weight_of_edge(0) == 1);
    auto types = classify_edges(xi);
    CHECK(types[0] == EdgeType::T1b);
  }
  SECTION("split(5): a 6-cycle alternating parabolic and elliptic") {
    RingCtx R(5);
    ModularGraph xi = build_xi(family_group(Family::split, R), std_conjugation(R));
    auto stats = component_stats(xi);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].parabolic == 3);
    CHECK(stats[0].elliptic == 3);
    CHECK(stats[0].weights == std::vector<int>{1, 1, 1, 2, 2, 2});
  }
  SECTION("X-(2): one cusp with a weight-2 loop") {
    RingCtx R(2);
    ModularGraph xi = build_xi(family_group(Family::gamma, R), inv_conjugation(R));
    REQUIRE(xi.vertices.size() == 1);
    REQUIRE(xi.edge_count() == 1);
    CHECK(xi.is_loop(0));
    CHECK(xi.weight_of_edge(0) == 2);
  }
}

TEST_CASE("oracle equivalence on a sample") {
  CheckReport rep = check_oracle(6);
  INFO((rep.failures.empty() ? std::string() : rep.failures.front()));
  CHECK(rep.ok());
}

TEST_CASE("edge classification") {
  RingCtx R(5);
  ModularGraph xi = build_xi(family_group(Family::gamma0, R), std_conjugation(R));
  for (EdgeType t : classify_edges(xi)) CHECK(t == EdgeType::T1a);

  RingCtx R1(1);
  ModularGraph id = build_xi(family_group(Family::full, R1), std_conjugation(R1));
  for (EdgeType t : classify_edges(id)) CHECK(t == EdgeType::T2);

  ModularGraph bad;
  int e1 = bad.add_vertex(VertexKind::elliptic);
  int e2 = bad.add_vertex(VertexKind::elliptic);
  bad.add_edge(e1, e2, 1);
  CHECK_THROWS_AS(classify_edges(bad), std::invalid_argument);
}

TEST_CASE("no real elliptic points for upper-triangular groups at N > 2") {
  for (uint32_t n = 3; n <= 24; ++n) {
    RingCtx R(n);
    for (Family f : {Family::gamma0, Family::gamma1}) {
      XiBuild xi = build_xi_detailed(family_group(f, R), std_conjugation(R));
      REQUIRE(xi.elliptic_count == 0);
    }
  }
  // and for inverse images of upper-triangular groups
  RingCtx R5(5), R15(15);
  XiBuild xi = build_xi_detailed(preimage_group(family_group(Family::gamma0, R5), R15),
                                 std_conjugation(R15));
  REQUIRE(xi.elliptic_count == 0);
}

TEST_CASE("product laws over computed graphs") {
  std::vector<ModularGraph> graphs;
  for (uint32_t n : {2u, 3u, 4u, 5u, 8u, 9u, 12u}) {
    RingCtx R(n);
    for (Family f : {Family::gamma0, Family::split})
      graphs.push_back(build_xi(family_group(f, R), std_conjugation(R)));
  }
  size_t tested = 0;
  for (const ModularGraph& a : graphs)
    for (const ModularGraph& b : graphs) {
      if (!is_regular(a) && !is_regular(b)) continue;
      ++tested;
      REQUIRE(isomorphic(product(a, b), product(b, a)));
    }
  REQUIRE(tested > 50);
}

TEST_CASE("oracle guard") {
  // N = 60 violates both halves of the guard: N > 16 and |G| > 1e5
  RingCtx R(60);
  SubgroupSpec full = family_group(Family::full, R);
  CHECK_THROWS_AS(build_xi_oracle(full, std_conjugation(R)), std::invalid_argument);
}
