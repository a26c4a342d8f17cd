#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "xigraph/modgraph.hpp"

using namespace xigraph;

namespace {

// The identity graph for the product: one P, one E, one edge of each weight.
ModularGraph identity_graph() {
  ModularGraph g;
  int p = g.add_vertex(VertexKind::parabolic, "p");
  int e = g.add_vertex(VertexKind::elliptic, "e");
  g.add_edge(p, e, 1);
  g.add_edge(p, e, 2);
  return g;
}

// Xi_odd: two parabolic vertices joined by one edge of each weight.
ModularGraph xi_odd() {
  ModularGraph g;
  int a = g.add_vertex(VertexKind::parabolic, "0");
  int b = g.add_vertex(VertexKind::parabolic, "inf");
  g.add_edge(a, b, 1);
  g.add_edge(a, b, 2);
  return g;
}

// Xi_2: triangle 0 - inf - e with weights 1, 2, 1.
ModularGraph xi_two() {
  ModularGraph g;
  int a = g.add_vertex(VertexKind::parabolic, "0");
  int b = g.add_vertex(VertexKind::parabolic, "inf");
  int e = g.add_vertex(VertexKind::elliptic, "e");
  g.add_edge(a, b, 1);
  g.add_edge(b, e, 2);
  g.add_edge(e, a, 1);
  return g;
}

ModularGraph relabeled_copy(const ModularGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.vertices.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> edges(g.edge_count());
  for (size_t i = 0; i < edges.size(); ++i) edges[i] = int(i);
  std::shuffle(edges.begin(), edges.end(), rng);
  ModularGraph h;
  std::vector<int> newid(g.vertices.size());
  std::vector<std::pair<VertexKind, int>> slots(g.vertices.size(),
                                                {VertexKind::parabolic, -1});
  for (size_t v = 0; v < g.vertices.size(); ++v) slots[perm[v]] = {g.vertices[v].kind, int(v)};
  for (const auto& [kind, orig] : slots) newid[orig] = h.add_vertex(kind, "");
  for (int e : edges)
    h.add_edge(newid[g.source(2 * e)], newid[g.source(2 * e + 1)], g.weight_of_edge(e));
  return h;
}

}  // namespace

TEST_CASE("verify_cyclic on basic graphs") {
  ModularGraph id = identity_graph();
  auto sigs = verify_cyclic(id);
  REQUIRE(sigs.size() == 1);
  REQUIRE(sigs[0].size() == 2);
  CycleSignature want = canonical_cycle(
      {{uint8_t(VertexKind::parabolic), 1}, {uint8_t(VertexKind::elliptic), 2}});
  CHECK(sigs[0] == want);

  // two disjoint 2-cycles give two equal signatures
  ModularGraph two;
  for (int k = 0; k < 2; ++k) {
    int a = two.add_vertex(VertexKind::parabolic);
    int b = two.add_vertex(VertexKind::parabolic);
    two.add_edge(a, b, 1);
    two.add_edge(a, b, 2);
  }
  auto s2 = verify_cyclic(two);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == s2[1]);

  // a path has valence-1 endpoints
  ModularGraph path;
  int a = path.add_vertex(VertexKind::parabolic);
  int b = path.add_vertex(VertexKind::parabolic);
  path.add_edge(a, b, 1);
  CHECK_THROWS_AS(verify_cyclic(path), valence_error);

  // single loop is a 1-cycle
  ModularGraph loop;
  int v = loop.add_vertex(VertexKind::parabolic);
  loop.add_edge(v, v, 1);
  auto s3 = verify_cyclic(loop);
  REQUIRE(s3.size() == 1);
  REQUIRE(s3[0].size() == 1);
}

TEST_CASE("is_regular") {
  ModularGraph id = identity_graph();
  verify_cyclic(id);
  CHECK(is_regular(id));
  ModularGraph odd = xi_odd();
  verify_cyclic(odd);
  CHECK(is_regular(odd));

  ModularGraph loop;
  int v = loop.add_vertex(VertexKind::parabolic);
  loop.add_edge(v, v, 1);
  CHECK_FALSE(is_regular(loop));

  ModularGraph ww;
  int a = ww.add_vertex(VertexKind::parabolic);
  int b = ww.add_vertex(VertexKind::parabolic);
  ww.add_edge(a, b, 2);
  ww.add_edge(a, b, 2);
  CHECK_FALSE(is_regular(ww));
}

TEST_CASE("signatures are relabeling invariant") {
  std::mt19937_64 rng(7);
  for (const ModularGraph& g : {identity_graph(), xi_odd(), xi_two()}) {
    for (int trial = 0; trial < 25; ++trial) {
      ModularGraph h = relabeled_copy(g, rng);
      REQUIRE(cycle_signatures(g) == cycle_signatures(h));
    }
  }
}

TEST_CASE("isomorphic distinguishes weights") {
  ModularGraph a, b;
  int a1 = a.add_vertex(VertexKind::parabolic), a2 = a.add_vertex(VertexKind::parabolic);
  a.add_edge(a1, a2, 1);
  a.add_edge(a1, a2, 2);
  int b1 = b.add_vertex(VertexKind::parabolic), b2 = b.add_vertex(VertexKind::parabolic);
  b.add_edge(b1, b2, 2);
  b.add_edge(b1, b2, 2);
  CHECK(isomorphic(a, a));
  CHECK_FALSE(isomorphic(a, b));
}

TEST_CASE("product basics") {
  ModularGraph id = identity_graph();
  ModularGraph odd = xi_odd();
  ModularGraph two = xi_two();

  SECTION("identity law") {
    for (const ModularGraph& g : {odd, two, identity_graph()}) {
      ModularGraph p = product(g, id);
      CHECK(isomorphic(p, g));
      ModularGraph q = product(id, g);
      CHECK(isomorphic(q, g));
    }
  }

  SECTION("odd times odd splits") {
    ModularGraph p = product(odd, odd);
    ModularGraph expect;
    for (int k = 0; k < 2; ++k) {
      int a = expect.add_vertex(VertexKind::parabolic);
      int b = expect.add_vertex(VertexKind::parabolic);
      expect.add_edge(a, b, 1);
      expect.add_edge(a, b, 2);
    }
    CHECK(isomorphic(p, expect));
  }

  SECTION("odd times xi2 is the weighted 4-cycle") {
    ModularGraph p = product(odd, two);
    auto stats = component_stats(p);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].parabolic == 4);
    CHECK(stats[0].elliptic == 0);
    CHECK(stats[0].weights == std::vector<int>{1, 1, 1, 2});
  }

  SECTION("commutative, never E-E edges") {
    ModularGraph p = product(two, odd);
    ModularGraph q = product(odd, two);
    CHECK(isomorphic(p, q));
    for (int e = 0; e < p.edge_count(); ++e) {
      bool ep = p.vertices[p.source(2 * e)].kind == VertexKind::parabolic ||
                p.vertices[p.source(2 * e + 1)].kind == VertexKind::parabolic;
      REQUIRE(ep);
    }
  }

  SECTION("precondition") {
    ModularGraph loop;
    int v = loop.add_vertex(VertexKind::parabolic);
    loop.add_edge(v, v, 1);
    CHECK_THROWS_AS(product(loop, loop), std::invalid_argument);
  }
}

TEST_CASE("product is commutative and distributes over disjoint union") {
  // representative shapes: the identity, a regular 2-cycle, a triangle with
  // an elliptic vertex, and a loop component
  std::vector<ModularGraph> graphs = {identity_graph(), xi_odd(), xi_two()};
  ModularGraph loopg;
  int v = loopg.add_vertex(VertexKind::parabolic);
  loopg.add_edge(v, v, 2);
  graphs.push_back(loopg);
  for (const ModularGraph& a : graphs) {
    for (const ModularGraph& b : graphs) {
      if (!is_regular(a) && !is_regular(b)) continue;
      REQUIRE(isomorphic(product(a, b), product(b, a)));
      for (const ModularGraph& c : graphs) {
        if (!is_regular(c) && !(is_regular(a) && is_regular(b))) continue;
        ModularGraph lhs = product(disjoint_union(a, b), c);
        ModularGraph rhs = disjoint_union(product(a, c), product(b, c));
        REQUIRE(isomorphic(lhs, rhs));
      }
    }
  }
}

TEST_CASE("component stats") {
  ModularGraph id = identity_graph();
  auto st = component_stats(id);
  REQUIRE(st.size() == 1);
  CHECK(st[0].parabolic == 1);
  CHECK(st[0].elliptic == 1);
  CHECK(st[0].weights == std::vector<int>{1, 2});
}
