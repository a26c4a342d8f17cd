#pragma once

// The graph Xi attached to a real subgroup G of SL2(Z/N) and a conjugation
// C: parabolic vertex classes, geodesic triples with the order-8 map rho,
// elliptic vertices from intersecting geodesics, and the quotient by G.
//
// A triple [x,y;z] of basis vectors is valid when
//   (a) <x,z> = <z,y> = 1, and
//   (b) x + y = wz for a weight w in {1,2} (then <x,y> = w),
// and is a geodesic when additionally
//   (c) G contains the element g with Cg - 1 = w'<-,x>y and
//       Cg + 1 = w'<-,y>x, where w' = 3 - w is the complementary weight.
// Such g is admissible and satisfies Cgx = x, Cgy = -y, so the endpoints of
// a geodesic are parabolic vertices.  Triples in one <rho^2>-orbit are the
// same geodesic.
//
// Two construction paths are provided: an optimized one anchored at
// parabolic orbit representatives, and a fully brute-force oracle that
// shares nothing with it beyond Mat2/Vec2 arithmetic.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "xigraph/groups.hpp"
#include "xigraph/modgraph.hpp"

namespace xigraph {

// A triple [x,y;z] of basis vectors with <x,z> = <z,y> = 1 and x + y = w z,
// w in {1,2}.  The weight is part of the identity (the ring values collapse
// at N <= 2).  `witness` is the element g of condition (c) when known.
struct GeodesicTriple {
  Vec2 x, y, z;
  int w = 1;
  std::optional<Mat2> witness;

  int cw() const { return 3 - w; }

  bool operator==(const GeodesicTriple& o) const {
    return w == o.w && x == o.x && y == o.y && z == o.z;
  }
};

using TripleKey = std::array<uint32_t, 7>;

inline TripleKey triple_key(const GeodesicTriple& t) {
  return {uint32_t(t.w), t.x.a, t.x.b, t.y.a, t.y.b, t.z.a, t.z.b};
}

// rho([x,y;z]) = [z, z - w'x; y], of weight w'.  Defined on all triples
// satisfying (a)-(b); rho^8 = id and rho^4 = negation.
inline GeodesicTriple rho(const GeodesicTriple& t) {
  GeodesicTriple r;
  r.x = t.z;
  r.y = t.z - t.x.scaled(uint32_t(t.cw()));
  r.z = t.y;
  r.w = t.cw();
  return r;
}

// The four members {T, rho^2 T, rho^4 T, rho^6 T} of the <rho^2>-orbit.
inline std::array<GeodesicTriple, 4> rho2_orbit(const GeodesicTriple& t) {
  GeodesicTriple t2 = rho(rho(t));
  GeodesicTriple t4 = rho(rho(t2));
  GeodesicTriple t6 = rho(rho(t4));
  return {t, t2, t4, t6};
}

// Lexicographically least member of the <rho^2>-orbit.
inline GeodesicTriple canonical_triple(const GeodesicTriple& t) {
  GeodesicTriple best = t;
  TripleKey bk = triple_key(t);
  for (const GeodesicTriple& v : rho2_orbit(t)) {
    TripleKey k = triple_key(v);
    if (k < bk) {
      bk = k;
      best = v;
    }
  }
  best.witness.reset();
  return best;
}

// A geodesic: a <rho^2>-orbit satisfying condition (c), stored canonically.
struct GeodesicClass {
  GeodesicTriple rep;
};

// The unique candidate for condition (c): the matrix of
// v -> Cv + w' <v,x> Cy; condition (c) holds iff it belongs to G.
// Its determinant is 1 automatically.
inline Mat2 condition_c_candidate(const Vec2& x, const Vec2& y, int wc, const Conjugation& conj) {
  const RingCtx& R = *x.R;
  uint32_t wcr = R.reduce(wc);
  Vec2 cy = conj.apply(y);
  Vec2 col1(conj.c.m[0], conj.c.m[2], R);
  Vec2 col2(conj.c.m[1], conj.c.m[3], R);
  col1 = col1 + cy.scaled(R.mul(wcr, x.b));
  col2 = col2 + cy.scaled(R.mul(wcr, R.neg(x.a)));
  return Mat2::from_columns(col1, col2);
}

// The unique linear map h with h x = to.x and h z = to.z ((x,z) is a basis
// since <x,z> = 1).  For equal-weight triples, h y = to.y and det h = 1 hold
// automatically.
inline Mat2 transporter(const GeodesicTriple& from, const GeodesicTriple& to) {
  return Mat2::from_columns(to.x, to.z) * Mat2::from_columns(from.x, from.z).inv_unimodular();
}

// The map sigma with sigma(x) = -y, sigma(z) = z - w'y (and sigma(y) = x).
// Geodesic [x,y;z] intersects its rho-image iff sigma belongs to G.
inline Mat2 sigma_matrix(const GeodesicTriple& t) {
  const RingCtx& R = *t.x.R;
  Vec2 sx = -t.y;
  Vec2 sz = t.z - t.y.scaled(uint32_t(t.cw()));
  Mat2 s = Mat2::from_columns(sx, sz) * Mat2::from_columns(t.x, t.z).inv_unimodular();
  if (s.det() != R.reduce(1))
    throw std::logic_error("sigma_matrix: determinant != 1 (internal bug)");
  return s;
}

inline std::optional<GeodesicClass> intersects(const GeodesicClass& cls,
                                               const SubgroupSpec& spec) {
  if (!spec.member(sigma_matrix(cls.rep))) return std::nullopt;
  return GeodesicClass{canonical_triple(rho(cls.rep))};
}

// x is a parabolic vertex iff some admissible g in G fixes it via Cg.  All
// such Cg are parametrized over alpha: Cg x = x, Cg u = alpha x - u.
inline bool is_parabolic_vector(const Vec2& x, const SubgroupSpec& spec,
                                const Conjugation& conj) {
  const RingCtx& R = spec.ring();
  Vec2 u = complete_basis(x);
  Mat2 binv = Mat2::from_columns(x, u).inv_unimodular();
  for (uint32_t alpha = 0; alpha < R.modulus(); ++alpha) {
    Vec2 mu = x.scaled(alpha) - u;
    Mat2 g = conj.c * (Mat2::from_columns(x, mu) * binv);
    if (spec.member(g)) return true;
  }
  return false;
}

// Orbit partition of the parabolic vectors.  Representatives are the
// lexicographically least members of their orbits, listed in order.
struct ParabolicOrbits {
  std::vector<Vec2> reps;
  std::unordered_map<uint64_t, int> class_of;  // every parabolic vector -> class id
};

inline ParabolicOrbits parabolic_orbits(const SubgroupSpec& spec, const Conjugation& conj) {
  ParabolicOrbits out;
  for (const Vec2& x : all_basis_vectors(spec.ring())) {
    if (out.class_of.count(x.key())) continue;
    if (!is_parabolic_vector(x, spec, conj)) continue;
    int id = int(out.reps.size());
    out.reps.push_back(x);  // first undiscovered vector is its orbit's lex-min
    for (const Vec2& v : orbit(spec, x, true)) out.class_of[v.key()] = id;
  }
  return out;
}

// Representatives of the parabolic vertex classes (mod G and mod +-1).
inline std::vector<Vec2> parabolic_classes(const SubgroupSpec& spec, const Conjugation& conj) {
  return parabolic_orbits(spec, conj).reps;
}

namespace detail {

// Solutions z of x + y = wz with <x,z> = 1; all torsion-shifted solutions
// are emitted at even N.
inline std::vector<Vec2> solve_third_component(const Vec2& x, const Vec2& y, int w) {
  const RingCtx& R = *x.R;
  std::vector<Vec2> out;
  Vec2 s = x + y;
  if (w == 1) {
    out.push_back(s);
    return out;
  }
  if (R.modulus() % 2 == 1) {
    uint32_t inv2 = R.inv(2 % R.modulus());
    out.push_back(s.scaled(inv2));
    return out;
  }
  if (s.a % 2 != 0 || s.b % 2 != 0) return out;
  uint32_t h = R.modulus() / 2;
  for (uint32_t da : {0u, h})
    for (uint32_t db : {0u, h}) {
      Vec2 z(s.a / 2 + da, s.b / 2 + db, R);
      if (pairing(x, z) == R.reduce(1)) out.push_back(z);
    }
  std::sort(out.begin(), out.end(), [](const Vec2& a, const Vec2& b) { return a < b; });
  return out;
}

}  // namespace detail

// All triples [x, y; z] with first component exactly x satisfying (a)-(c):
// y runs over w*u + s*x, the candidate g is built and tested for membership,
// then every admissible z is emitted.
inline std::vector<GeodesicTriple> geodesics_at(const Vec2& x, const SubgroupSpec& spec,
                                                const Conjugation& conj) {
  const RingCtx& R = spec.ring();
  Vec2 u = complete_basis(x);
  std::vector<GeodesicTriple> out;
  for (int w : {1, 2}) {
    for (uint32_t s = 0; s < R.modulus(); ++s) {
      Vec2 y = u.scaled(R.reduce(w)) + x.scaled(s);
      if (!y.is_basis_vector()) continue;
      if (pairing(x, y) != R.reduce(w)) continue;
      Mat2 g = condition_c_candidate(x, y, 3 - w, conj);
      if (!spec.member(g)) continue;
      for (const Vec2& z : detail::solve_third_component(x, y, w)) {
        GeodesicTriple t;
        t.x = x;
        t.y = y;
        t.z = z;
        t.w = w;
        t.witness = g;
        out.push_back(t);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Optimized construction of Xi

struct XiBuild {
  ModularGraph graph;
  std::vector<Vec2> parabolic_reps;
  size_t geodesic_class_count = 0;
  size_t elliptic_count = 0;
};

namespace detail {

struct ClassEntry {
  GeodesicTriple rep;  // anchored at a parabolic orbit representative
  TripleKey canon;
  int cls_x, cls_y;
};

struct Bucket {
  std::vector<int> entries;
};

// G-equivalence of equal-weight geodesic classes, tested constructively via
// the unique transporter on each rho^2-variant.
inline bool classes_equivalent(const GeodesicTriple& a, const GeodesicTriple& b,
                               const SubgroupSpec& spec) {
  if (a.w != b.w) return false;
  for (const GeodesicTriple& v : rho2_orbit(b))
    if (spec.member(transporter(a, v))) return true;
  return false;
}

}  // namespace detail

inline XiBuild build_xi_detailed(const SubgroupSpec& spec, const Conjugation& conj) {
  check_real_subgroup(spec, conj);
  ParabolicOrbits orbits = parabolic_orbits(spec, conj);

  // Collect geodesic classes anchored at the orbit representatives and
  // deduplicate by G-equivalence within (weight, endpoint-classes) buckets.
  std::vector<detail::ClassEntry> classes;
  std::map<std::tuple<int, int, int>, detail::Bucket> buckets;
  auto bucket_key = [&](int w, int cx, int cy) {
    return std::make_tuple(w, std::min(cx, cy), std::max(cx, cy));
  };
  auto locate = [&](const GeodesicTriple& t) -> int {
    int cx = orbits.class_of.at(t.x.key());
    int cy = orbits.class_of.at(t.y.key());
    auto it = buckets.find(bucket_key(t.w, cx, cy));
    if (it == buckets.end()) return -1;
    for (int idx : it->second.entries)
      if (detail::classes_equivalent(classes[idx].rep, t, spec)) return idx;
    return -1;
  };

  for (const Vec2& rep : orbits.reps) {
    for (const GeodesicTriple& t : geodesics_at(rep, spec, conj)) {
      if (locate(t) >= 0) continue;
      detail::ClassEntry e;
      e.rep = t;
      e.canon = triple_key(canonical_triple(t));
      e.cls_x = orbits.class_of.at(t.x.key());
      e.cls_y = orbits.class_of.at(t.y.key());
      buckets[bucket_key(t.w, e.cls_x, e.cls_y)].entries.push_back(int(classes.size()));
      classes.push_back(std::move(e));
    }
  }

  // Deterministic class order.
  std::vector<int> order(classes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (classes[a].rep.w != classes[b].rep.w) return classes[a].rep.w < classes[b].rep.w;
    return classes[a].canon < classes[b].canon;
  });
  std::vector<int> rank(classes.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = int(i);

  XiBuild out;
  out.parabolic_reps = orbits.reps;
  out.geodesic_class_count = classes.size();
  for (const Vec2& rep : orbits.reps)
    out.graph.add_vertex(VertexKind::parabolic, rep.str());

  // Elliptic vertices: intersecting pairs {c, rho c}, identified by the
  // sorted pair of class ranks.
  std::map<std::pair<int, int>, int> elliptic_vertex;
  struct PendingEdge {
    int u, v, w;
  };
  std::vector<PendingEdge> edges;
  for (int pos = 0; pos < int(order.size()); ++pos) {
    const detail::ClassEntry& e = classes[order[pos]];
    Mat2 sig = sigma_matrix(e.rep);
    if (spec.member(sig)) {
      int partner = locate(rho(e.rep));
      if (partner < 0) throw std::logic_error("build_xi: intersecting partner class not found");
      if (e.cls_x != e.cls_y)
        throw std::logic_error("build_xi: sigma present but endpoints inequivalent");
      auto pkey = std::minmax(pos, rank[partner]);
      auto it = elliptic_vertex.find({pkey.first, pkey.second});
      int ev;
      if (it != elliptic_vertex.end()) {
        ev = it->second;
      } else {
        ev = out.graph.add_vertex(VertexKind::elliptic,
                                  "e{" + e.rep.x.str() + "," + e.rep.y.str() + "}");
        elliptic_vertex.insert({{pkey.first, pkey.second}, ev});
        ++out.elliptic_count;
      }
      edges.push_back({e.cls_x, ev, e.rep.w});
    } else {
      edges.push_back({e.cls_x, e.cls_y, e.rep.w});
    }
  }
  for (const PendingEdge& pe : edges) out.graph.add_edge(pe.u, pe.v, pe.w);
  verify_cyclic(out.graph);
  return out;
}

inline ModularGraph build_xi(const SubgroupSpec& spec, const Conjugation& conj) {
  return build_xi_detailed(spec, conj).graph;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

// Constructs Xi-tilde in full (all basis vectors, all triples by nested
// scan, condition (c) by scanning the group, intersections by membership of
// rho-images in the geodesic set) and quotients by explicit G-orbits.
inline ModularGraph build_xi_oracle(const SubgroupSpec& spec, const Conjugation& conj) {
  const RingCtx& R = spec.ring();
  if (R.modulus() > 16 && spec.order() > 100000)
    throw std::invalid_argument("build_xi_oracle: guard requires N <= 16 or |G| <= 1e5");

  std::vector<Mat2> G;
  enumerate_sl2(R, [&](const Mat2& g) {
    if (spec.member(g)) G.push_back(g);
  });

  std::vector<Mat2> admissibles;
  for (const Mat2& g : G) {
    Mat2 cg = conj.c * g;
    if ((cg * cg).is_identity()) admissibles.push_back(g);
  }

  std::vector<Vec2> basis = all_basis_vectors(R);
  std::vector<Vec2> parab;
  for (const Vec2& x : basis)
    for (const Mat2& g : admissibles)
      if ((conj.c * g) * x == x) {
        parab.push_back(x);
        break;
      }

  // Vertex of Xi-tilde: basis vector mod +-1, keyed by the lesser of v, -v.
  auto pv_key = [&](const Vec2& v) {
    Vec2 nv = -v;
    return std::min(v.key(), nv.key());
  };

  // All triples, by nested scan; the weight tag distinguishes collapsing
  // ring values at N <= 2.
  struct OTriple {
    Vec2 x, y, z;
    int w;
  };
  auto okey = [](const OTriple& t) {
    return TripleKey{uint32_t(t.w), t.x.a, t.x.b, t.y.a, t.y.b, t.z.a, t.z.b};
  };
  auto orho = [](const OTriple& t) {
    int wc = 3 - t.w;
    return OTriple{t.z, t.z - t.x.scaled(uint32_t(wc)), t.y, wc};
  };

  std::vector<OTriple> triples;
  for (const Vec2& x : basis)
    for (const Vec2& y : basis)
      for (int w : {1, 2}) {
        if (pairing(x, y) != R.reduce(w)) continue;
        std::vector<Vec2> zs;
        for (const Vec2& z : basis)
          if (pairing(x, z) == R.reduce(1) && pairing(z, y) == R.reduce(1) &&
              x + y == z.scaled(R.reduce(w)))
            zs.push_back(z);
        if (zs.empty()) continue;
        // condition (c): scan for g with Cg - 1 = w'<-,x>y and Cg + 1 = w'<-,y>x
        int wc = 3 - w;
        bool found = false;
        for (const Mat2& g : G) {
          Mat2 cg = conj.c * g;
          uint32_t wcr = R.reduce(wc);
          bool ok = cg.m[0] == R.add(1 % R.modulus(), R.mul(wcr, R.mul(x.b, y.a))) &&
                    cg.m[1] == R.mul(wcr, R.mul(R.neg(x.a), y.a)) &&
                    cg.m[2] == R.mul(wcr, R.mul(x.b, y.b)) &&
                    cg.m[3] == R.add(1 % R.modulus(), R.mul(wcr, R.mul(R.neg(x.a), y.b)));
          if (ok) {
            bool ok2 = cg.m[0] == R.sub(R.mul(wcr, R.mul(y.b, x.a)), 1 % R.modulus()) &&
                       cg.m[1] == R.mul(wcr, R.mul(R.neg(y.a), x.a)) &&
                       cg.m[2] == R.mul(wcr, R.mul(y.b, x.b)) &&
                       cg.m[3] == R.sub(R.mul(wcr, R.mul(R.neg(y.a), x.b)), 1 % R.modulus());
            if (ok2) {
              found = true;
              break;
            }
          }
        }
        if (!found) continue;
        for (const Vec2& z : zs) triples.push_back({x, y, z, w});
      }

  // Geodesics: <rho^2>-orbits of the triples.
  std::set<TripleKey> triple_set;
  for (const OTriple& t : triples) triple_set.insert(okey(t));
  auto canon = [&](OTriple t) {
    TripleKey best = okey(t);
    OTriple bt = t;
    OTriple cur = t;
    for (int i = 0; i < 3; ++i) {
      cur = orho(orho(cur));
      TripleKey k = okey(cur);
      if (k < best) {
        best = k;
        bt = cur;
      }
    }
    return bt;
  };
  std::map<TripleKey, OTriple> geodesics;  // canonical key -> canonical rep
  for (const OTriple& t : triples) {
    OTriple c = canon(t);
    geodesics.emplace(okey(c), c);
  }

  // A geodesic intersects another iff its rho-image is itself a geodesic.
  auto elliptic_pair_of = [&](const OTriple& t) -> std::optional<std::pair<TripleKey, TripleKey>> {
    OTriple r = canon(orho(t));
    if (!geodesics.count(okey(r))) return std::nullopt;
    TripleKey a = okey(canon(t)), b = okey(r);
    return std::make_pair(std::min(a, b), std::max(a, b));
  };

  // Quotient by G, acting explicitly on vertices, geodesics and edges.
  auto act_vec = [&](const Mat2& h, const Vec2& v) { return h * v; };
  auto act_tri = [&](const Mat2& h, const OTriple& t) {
    return canon(OTriple{act_vec(h, t.x), act_vec(h, t.y), act_vec(h, t.z), t.w});
  };

  // Parabolic vertex orbits.
  std::map<uint64_t, uint64_t> pv_orbit_rep;  // pv key -> min pv key in orbit
  for (const Vec2& v : parab) {
    uint64_t k = pv_key(v);
    if (pv_orbit_rep.count(k)) continue;
    uint64_t best = k;
    std::vector<uint64_t> members;
    for (const Mat2& h : G) {
      uint64_t hk = pv_key(act_vec(h, v));
      members.push_back(hk);
      best = std::min(best, hk);
    }
    for (uint64_t m : members) pv_orbit_rep[m] = best;
  }

  // Geodesic orbits.
  std::map<TripleKey, TripleKey> geo_orbit_rep;
  for (const auto& [k, t] : geodesics) {
    if (geo_orbit_rep.count(k)) continue;
    TripleKey best = k;
    std::vector<TripleKey> members;
    for (const Mat2& h : G) {
      TripleKey hk = okey(act_tri(h, t));
      members.push_back(hk);
      best = std::min(best, hk);
    }
    for (const TripleKey& m : members) geo_orbit_rep[m] = best;
  }

  // Elliptic vertex orbits, as orbits of sorted geodesic-pair keys.
  using PairKey = std::pair<TripleKey, TripleKey>;
  std::map<PairKey, PairKey> ell_orbit_rep;
  for (const auto& [k, t] : geodesics) {
    auto p = elliptic_pair_of(t);
    if (!p || ell_orbit_rep.count(*p)) continue;
    PairKey best = *p;
    std::vector<PairKey> members;
    for (const Mat2& h : G) {
      OTriple t1 = act_tri(h, geodesics.at(p->first));
      OTriple t2 = act_tri(h, geodesics.at(p->second));
      TripleKey a = okey(t1), b = okey(t2);
      PairKey hp = {std::min(a, b), std::max(a, b)};
      members.push_back(hp);
      best = std::min(best, hp);
    }
    for (const PairKey& m : members) ell_orbit_rep[m] = best;
  }

  // Edges of Xi-tilde and their orbits.  A geodesic without elliptic vertex
  // contributes the single edge {x,y}; with elliptic vertex p it contributes
  // the two incidences (geodesic, x)-p and (geodesic, y)-p, which may or may
  // not be identified by G -- the orbit computation decides.
  struct OEdge {
    TripleKey geo;   // geodesic class key (orbit-minimal for dedup)
    uint64_t pv;     // endpoint (mod +-1) key, orbit-minimized jointly with geo
    bool incidence;  // true: edge to the elliptic vertex of `geo`
    int w;
    bool operator<(const OEdge& o) const {
      return std::tie(incidence, geo, pv, w) < std::tie(o.incidence, o.geo, o.pv, o.w);
    }
  };
  std::set<OEdge> edge_orbits;
  for (const auto& [k, t] : geodesics) {
    if (!elliptic_pair_of(t)) {
      // Plain edge: the Xi-tilde edge is the geodesic itself, so its orbit
      // is the geodesic orbit.
      edge_orbits.insert({geo_orbit_rep.at(k), 0, false, t.w});
    } else {
      // Incidence (geodesic, endpoint): minimize the pair jointly over G.
      for (const Vec2& endpoint : {t.x, t.y}) {
        std::pair<TripleKey, uint64_t> best = {okey(t), pv_key(endpoint)};
        for (const Mat2& h : G)
          best = std::min(best, {okey(act_tri(h, t)), pv_key(act_vec(h, endpoint))});
        edge_orbits.insert({best.first, best.second, true, t.w});
      }
    }
  }

  // Assemble the quotient graph.
  ModularGraph xi;
  std::map<uint64_t, int> pv_vertex;
  for (const auto& [k, rep] : pv_orbit_rep) {
    if (k != rep) continue;
    Vec2 v(uint32_t(rep >> 32), uint32_t(rep & 0xffffffffu), R);
    pv_vertex[rep] = xi.add_vertex(VertexKind::parabolic, v.str());
  }
  std::map<PairKey, int> ell_vertex;
  for (const auto& [k, rep] : ell_orbit_rep) {
    if (!(k == rep) || ell_vertex.count(rep)) continue;
    ell_vertex[rep] = xi.add_vertex(VertexKind::elliptic, "e");
  }
  for (const OEdge& e : edge_orbits) {
    if (!e.incidence) {
      const OTriple& t = geodesics.at(e.geo);
      xi.add_edge(pv_vertex.at(pv_orbit_rep.at(pv_key(t.x))),
                  pv_vertex.at(pv_orbit_rep.at(pv_key(t.y))), e.w);
    } else {
      const OTriple& t = geodesics.at(e.geo);
      PairKey prep = ell_orbit_rep.at(*elliptic_pair_of(t));
      xi.add_edge(pv_vertex.at(pv_orbit_rep.at(e.pv)), ell_vertex.at(prep), e.w);
    }
  }
  verify_cyclic(xi);
  return xi;
}

// ---------------------------------------------------------------------------
// Edge classification

enum class EdgeType { T1a, T1b, T2 };

inline const char* edge_type_name(EdgeType t) {
  switch (t) {
    case EdgeType::T1a: return "T1a";
    case EdgeType::T1b: return "T1b";
    default: return "T2";
  }
}

// T1a: edge between distinct parabolic vertices; T1b: loop at a parabolic
// vertex; T2: edge meeting an elliptic vertex.
inline std::vector<EdgeType> classify_edges(const ModularGraph& xi) {
  std::vector<EdgeType> out;
  for (int e = 0; e < xi.edge_count(); ++e) {
    VertexKind ks = xi.vertices[xi.source(2 * e)].kind;
    VertexKind kt = xi.vertices[xi.source(2 * e + 1)].kind;
    if (ks == VertexKind::elliptic && kt == VertexKind::elliptic)
      throw std::invalid_argument("classify_edges: edge between two elliptic vertices");
    if (ks == VertexKind::elliptic || kt == VertexKind::elliptic)
      out.push_back(EdgeType::T2);
    else if (xi.is_loop(e))
      out.push_back(EdgeType::T1b);
    else
      out.push_back(EdgeType::T1a);
  }
  return out;
}

}  // namespace xigraph
