#pragma once

// Modular graphs: disjoint unions of cycles with typed vertices
// (parabolic/elliptic) and {1,2}-weighted edges, every edge touching a
// parabolic vertex.  Undirectedness is encoded by darts with the involution
// tau; here darts are stored in pairs (2e, 2e+1) so tau(d) = d ^ 1.
// Provides cycle decomposition, canonical cycle signatures, isomorphism via
// signature multisets, and the fiber-like product over the identity graph.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace xigraph {

enum class VertexKind : uint8_t { parabolic, elliptic };

struct valence_error : std::runtime_error {
  int vertex;
  int valence;
  valence_error(int v, int k)
      : std::runtime_error("VALENCE(" + std::to_string(v) + ", " + std::to_string(k) + ")"),
        vertex(v),
        valence(k) {}
};

// Canonical form of one cycle: the sequence of (vertex kind, weight of the
// edge leaving it) pairs, minimized over rotations and both orientations.
using CycleSignature = std::vector<std::pair<uint8_t, uint8_t>>;

inline CycleSignature canonical_cycle(const CycleSignature& seq) {
  const size_t n = seq.size();
  CycleSignature rev(n);
  // Reversed traversal: vertex v_i is followed by the edge behind it.
  for (size_t i = 0; i < n; ++i) {
    size_t vi = (n - i) % n;
    rev[i] = {seq[vi].first, seq[(vi + n - 1) % n].second};
  }
  CycleSignature best;
  for (const CycleSignature& base : {seq, rev}) {
    for (size_t r = 0; r < n; ++r) {
      CycleSignature rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

class ModularGraph {
 public:
  struct Vertex {
    VertexKind kind;
    std::string label;
  };

  std::vector<Vertex> vertices;
  std::vector<int> dart_source;  // dart d: source vertex; target = source of d^1
  std::vector<int> dart_weight;  // equal on tau-paired darts
  bool verified_cyclic = false;

  int add_vertex(VertexKind k, std::string label = {}) {
    vertices.push_back({k, std::move(label)});
    return int(vertices.size()) - 1;
  }

  // Adds the undirected edge {u, v}; u == v makes a loop.
  int add_edge(int u, int v, int w) {
    dart_source.push_back(u);
    dart_source.push_back(v);
    dart_weight.push_back(w);
    dart_weight.push_back(w);
    verified_cyclic = false;
    return edge_count() - 1;
  }

  int edge_count() const { return int(dart_source.size()) / 2; }
  int dart_count() const { return int(dart_source.size()); }
  static int tau(int d) { return d ^ 1; }
  int edge_of(int d) const { return d / 2; }
  int source(int d) const { return dart_source[d]; }
  int target(int d) const { return dart_source[d ^ 1]; }
  int weight_of_edge(int e) const { return dart_weight[2 * e]; }
  bool is_loop(int e) const { return dart_source[2 * e] == dart_source[2 * e + 1]; }

  std::vector<std::vector<int>> darts_by_vertex() const {
    std::vector<std::vector<int>> inc(vertices.size());
    for (int d = 0; d < dart_count(); ++d) inc[dart_source[d]].push_back(d);
    return inc;
  }
};

// One cycle as an ordered dart walk (each edge used once).
struct Cycle {
  std::vector<int> darts;  // darts[i] leaves the i-th vertex of the cycle
};

namespace detail {

inline std::vector<Cycle> decompose_cycles(const ModularGraph& g) {
  auto inc = g.darts_by_vertex();
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (inc[v].size() != 2) throw valence_error(int(v), int(inc[v].size()));
  std::vector<char> edge_used(g.edge_count(), 0);
  std::vector<Cycle> cycles;
  for (int d0 = 0; d0 < g.dart_count(); ++d0) {
    if (edge_used[g.edge_of(d0)]) continue;
    Cycle cyc;
    int d = d0;
    while (!edge_used[g.edge_of(d)]) {
      edge_used[g.edge_of(d)] = 1;
      cyc.darts.push_back(d);
      int v = g.target(d);
      const auto& at = inc[v];
      int next = -1;
      for (int cand : at)
        if (!edge_used[g.edge_of(cand)]) next = cand;
      if (next == -1) break;  // cycle closed
      d = next;
    }
    if (g.target(cyc.darts.back()) != g.source(cyc.darts.front()))
      throw valence_error(g.target(cyc.darts.back()), 1);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

inline CycleSignature signature_of(const ModularGraph& g, const Cycle& c) {
  CycleSignature seq;
  for (int d : c.darts)
    seq.push_back({uint8_t(g.vertices[g.source(d)].kind), uint8_t(g.dart_weight[d])});
  return canonical_cycle(seq);
}

}  // namespace detail

// Checks valence 2 everywhere and decomposes into cycles; returns the
// multiset of canonical cycle signatures.  Throws valence_error otherwise.
inline std::vector<CycleSignature> verify_cyclic(ModularGraph& g) {
  auto cycles = detail::decompose_cycles(g);
  std::vector<CycleSignature> sigs;
  for (const Cycle& c : cycles) sigs.push_back(detail::signature_of(g, c));
  std::sort(sigs.begin(), sigs.end());
  g.verified_cyclic = true;
  return sigs;
}

inline std::vector<CycleSignature> cycle_signatures(const ModularGraph& g) {
  auto cycles = detail::decompose_cycles(g);
  std::vector<CycleSignature> sigs;
  for (const Cycle& c : cycles) sigs.push_back(detail::signature_of(g, c));
  std::sort(sigs.begin(), sigs.end());
  return sigs;
}

// Every vertex meets exactly one edge of each weight and there are no loops.
inline bool is_regular(const ModularGraph& g) {
  auto inc = g.darts_by_vertex();
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (inc[v].size() != 2) return false;
    int w1 = g.dart_weight[inc[v][0]], w2 = g.dart_weight[inc[v][1]];
    if (std::min(w1, w2) != 1 || std::max(w1, w2) != 2) return false;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) return false;
  return true;
}

// Sound and complete for disjoint unions of cycles.
inline bool isomorphic(const ModularGraph& a, const ModularGraph& b) {
  return cycle_signatures(a) == cycle_signatures(b);
}

struct ComponentStat {
  int parabolic = 0;
  int elliptic = 0;
  std::vector<int> weights;  // sorted edge weights around the cycle
};

inline std::vector<ComponentStat> component_stats(const ModularGraph& g) {
  std::vector<ComponentStat> out;
  for (const Cycle& c : detail::decompose_cycles(g)) {
    ComponentStat s;
    for (int d : c.darts) {
      if (g.vertices[g.source(d)].kind == VertexKind::parabolic)
        ++s.parabolic;
      else
        ++s.elliptic;
      s.weights.push_back(g.dart_weight[d]);
    }
    std::sort(s.weights.begin(), s.weights.end());
    out.push_back(std::move(s));
  }
  return out;
}

inline ModularGraph disjoint_union(const ModularGraph& a, const ModularGraph& b) {
  ModularGraph g = a;
  int off = int(a.vertices.size());
  for (const auto& v : b.vertices) g.add_vertex(v.kind, v.label);
  for (int e = 0; e < b.edge_count(); ++e)
    g.add_edge(b.source(2 * e) + off, b.source(2 * e + 1) + off, b.weight_of_edge(e));
  g.verified_cyclic = false;
  return g;
}

// The product of two modular graphs, one of which must be regular.
// Vertices: (P x P) u (E x E).  Edges: equal-weight dart pairs where either
// both endpoint types match, or both sources are parabolic and exactly one
// target is elliptic (the elliptic side then stays put).
inline ModularGraph product(const ModularGraph& g1, const ModularGraph& g2) {
  if (!is_regular(g1) && !is_regular(g2))
    throw std::invalid_argument("product: at least one factor must be regular");
  ModularGraph out;
  std::map<std::pair<int, int>, int> vmap;
  auto vertex_of = [&](int v1, int v2) {
    auto it = vmap.find({v1, v2});
    if (it != vmap.end()) return it->second;
    int id = out.add_vertex(g1.vertices[v1].kind,
                            "(" + g1.vertices[v1].label + "," + g2.vertices[v2].label + ")");
    vmap.insert({{v1, v2}, id});
    return id;
  };
  auto kind1 = [&](int v) { return g1.vertices[v].kind; };
  auto kind2 = [&](int v) { return g2.vertices[v].kind; };
  const VertexKind P = VertexKind::parabolic, E = VertexKind::elliptic;

  // Product darts are pairs (d1, d2); emit one edge per tau-orbit.
  struct PDart {
    int s1, s2;         // source components
    long long partner;  // tau image as d1 * M + d2
  };
  auto keyof = [&](int d1, int d2) { return (long long)d1 * g2.dart_count() + d2; };
  std::map<long long, PDart> darts;
  for (int d1 = 0; d1 < g1.dart_count(); ++d1) {
    for (int d2 = 0; d2 < g2.dart_count(); ++d2) {
      if (g1.dart_weight[d1] != g2.dart_weight[d2]) continue;
      int s1 = g1.source(d1), t1 = g1.target(d1);
      int s2 = g2.source(d2), t2 = g2.target(d2);
      long long partner;
      if (kind1(s1) == kind2(s2) && kind1(t1) == kind2(t2)) {
        partner = keyof(ModularGraph::tau(d1), ModularGraph::tau(d2));
      } else if (kind1(s1) == P && kind2(s2) == P && kind1(t1) == P && kind2(t2) == E) {
        partner = keyof(ModularGraph::tau(d1), d2);
      } else if (kind1(s1) == P && kind2(s2) == P && kind1(t1) == E && kind2(t2) == P) {
        partner = keyof(d1, ModularGraph::tau(d2));
      } else {
        continue;
      }
      darts[keyof(d1, d2)] = {s1, s2, partner};
    }
  }
  for (const auto& [key, pd] : darts) {
    if (pd.partner < key) continue;  // the partner emits the edge
    const PDart& qd = darts.at(pd.partner);
    int d1 = int(key / g2.dart_count()), d2 = int(key % g2.dart_count());
    out.add_edge(vertex_of(pd.s1, pd.s2), vertex_of(qd.s1, qd.s2), g1.dart_weight[d1]);
    (void)d2;
  }
  verify_cyclic(out);
  return out;
}

}  // namespace xigraph
