#pragma once

// Matrices over Z/N, conjugation data and real subgroups of SL2(Z/N):
// family groups with O(1) membership predicates, generated closures,
// inverse images, admissibility and orbit machinery.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "xigraph/modring.hpp"

namespace xigraph {

// ---------------------------------------------------------------------------
// Vectors and matrices

struct Vec2 {
  uint32_t a = 0, b = 0;
  const RingCtx* R = nullptr;

  Vec2() = default;
  Vec2(int64_t a_, int64_t b_, const RingCtx& r) : a(r.reduce(a_)), b(r.reduce(b_)), R(&r) {}

  bool operator==(const Vec2& o) const { return a == o.a && b == o.b; }
  bool operator<(const Vec2& o) const { return a != o.a ? a < o.a : b < o.b; }

  Vec2 operator+(const Vec2& o) const { return make(R->add(a, o.a), R->add(b, o.b)); }
  Vec2 operator-(const Vec2& o) const { return make(R->sub(a, o.a), R->sub(b, o.b)); }
  Vec2 operator-() const { return make(R->neg(a), R->neg(b)); }
  Vec2 scaled(uint32_t s) const { return make(R->mul(s, a), R->mul(s, b)); }

  // (x1, x2) generates a direct summand of (Z/N)^2 iff gcd(x1, x2, N) = 1.
  bool is_basis_vector() const {
    return std::gcd(std::gcd(int64_t(a), int64_t(b)), int64_t(R->modulus())) == 1;
  }

  uint64_t key() const { return uint64_t(a) << 32 | b; }
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

 private:
  Vec2 make(uint32_t x, uint32_t y) const {
    Vec2 v;
    v.a = x;
    v.b = y;
    v.R = R;
    return v;
  }
};

// Symplectic pairing <x,y> = x1 y2 - x2 y1.
inline uint32_t pairing(const Vec2& x, const Vec2& y) {
  return x.R->sub(x.R->mul(x.a, y.b), x.R->mul(x.b, y.a));
}

struct Mat2 {
  // Row-major [[a,b],[c,d]].
  std::array<uint32_t, 4> m{0, 0, 0, 0};
  const RingCtx* R = nullptr;

  Mat2() = default;
  Mat2(int64_t a, int64_t b, int64_t c, int64_t d, const RingCtx& r)
      : m{r.reduce(a), r.reduce(b), r.reduce(c), r.reduce(d)}, R(&r) {}

  static Mat2 identity(const RingCtx& r) { return Mat2(1, 0, 0, 1, r); }
  static Mat2 from_columns(const Vec2& u, const Vec2& v) {
    Mat2 g;
    g.m = {u.a, v.a, u.b, v.b};
    g.R = u.R;
    return g;
  }

  bool operator==(const Mat2& o) const { return m == o.m; }
  bool operator<(const Mat2& o) const { return m < o.m; }

  uint32_t det() const { return R->sub(R->mul(m[0], m[3]), R->mul(m[1], m[2])); }
  uint32_t trace() const { return R->add(m[0], m[3]); }

  Mat2 operator*(const Mat2& o) const {
    Mat2 g;
    g.R = R;
    g.m[0] = R->add(R->mul(m[0], o.m[0]), R->mul(m[1], o.m[2]));
    g.m[1] = R->add(R->mul(m[0], o.m[1]), R->mul(m[1], o.m[3]));
    g.m[2] = R->add(R->mul(m[2], o.m[0]), R->mul(m[3], o.m[2]));
    g.m[3] = R->add(R->mul(m[2], o.m[1]), R->mul(m[3], o.m[3]));
    return g;
  }

  Vec2 operator*(const Vec2& v) const {
    Vec2 w = v;
    w.a = R->add(R->mul(m[0], v.a), R->mul(m[1], v.b));
    w.b = R->add(R->mul(m[2], v.a), R->mul(m[3], v.b));
    return w;
  }

  Mat2 operator-() const {
    Mat2 g = *this;
    for (int i = 0; i < 4; ++i) g.m[i] = R->neg(m[i]);
    return g;
  }

  // Inverse of a det-1 matrix: adjugate.
  Mat2 inv_unimodular() const {
    Mat2 g = *this;
    g.m = {m[3], R->neg(m[1]), R->neg(m[2]), m[0]};
    return g;
  }

  bool is_identity() const { return m[0] == 1 % R->modulus() && m[1] == 0 && m[2] == 0 && m[3] == m[0]; }

  uint64_t key() const {
    return (uint64_t(m[0]) << 48) | (uint64_t(m[1]) << 32) | (uint64_t(m[2]) << 16) | m[3];
  }

  std::string str() const {
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
           std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
  }
};

// det(g) = 1 as an element of the ring (1 collapses to 0 at N = 1).
inline bool is_unimodular(const Mat2& g) { return g.det() == 1 % g.R->modulus(); }

struct Mat2Hash {
  size_t operator()(const Mat2& g) const { return std::hash<uint64_t>()(g.key()); }
};
struct Vec2Hash {
  size_t operator()(const Vec2& v) const { return std::hash<uint64_t>()(v.key()); }
};

using MatSet = std::unordered_set<Mat2, Mat2Hash>;

// A vector u with <x,u> = 1, for any basis vector x.
inline Vec2 complete_basis(const Vec2& x) {
  const RingCtx& R = *x.R;
  if (x.a == 0 && x.b == 0) {
    if (R.modulus() != 1) throw std::invalid_argument("complete_basis: zero vector");
    return Vec2(0, 0, R);
  }
  // Integer Bezout s*x1 + t*x2 = gcd(x1,x2), then scale by the gcd's inverse:
  // u = (-t/g, s/g) satisfies x1*u2 - x2*u1 = 1 (mod N).
  int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1, a = x.a, b = x.b;
  while (b != 0) {
    int64_t q = a / b;
    int64_t tmp = a - q * b;
    a = b;
    b = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  uint32_t ginv = R.inv(R.reduce(a));  // gcd(g, N) = 1 since x is a basis vector
  return Vec2(R.reduce(-t0 * int64_t(ginv)), R.reduce(s0 * int64_t(ginv)), R);
}

// All basis vectors of (Z/N)^2, lexicographic order.  At N = 1 this is the
// single vector (0,0).
inline std::vector<Vec2> all_basis_vectors(const RingCtx& R) {
  std::vector<Vec2> out;
  if (R.modulus() == 1) {
    out.push_back(Vec2(0, 0, R));
    return out;
  }
  for (uint32_t a = 0; a < R.modulus(); ++a)
    for (uint32_t b = 0; b < R.modulus(); ++b) {
      Vec2 v(a, b, R);
      if (v.is_basis_vector()) out.push_back(v);
    }
  return out;
}

// |SL2(Z/N)| = N^3 prod_{p|N} (1 - p^-2).
inline uint64_t sl2_order(uint32_t n) {
  uint64_t r = uint64_t(n) * n * n;
  for (auto [p, q] : factorize(n)) {
    r /= uint64_t(p) * p;
    r *= uint64_t(p) * p - 1;
  }
  return r;
}

// Visit every element of SL2(Z/N) exactly once: first columns run over basis
// vectors, second columns over a particular completion plus multiples of the
// first (det [x | w] = <x, w>).
template <typename Fn>
inline void enumerate_sl2(const RingCtx& R, Fn&& fn) {
  const uint32_t n = R.modulus();
  for (const Vec2& col1 : all_basis_vectors(R)) {
    Vec2 u = complete_basis(col1);
    for (uint32_t t = 0; t < n; ++t) fn(Mat2::from_columns(col1, u + col1.scaled(t)));
  }
}

// ---------------------------------------------------------------------------
// Conjugation

// An involution C in GL2(Z/N) of determinant -1.  C^-1 = C.
struct Conjugation {
  Mat2 c;

  explicit Conjugation(const Mat2& g) : c(g) {
    const RingCtx& R = *g.R;
    if (g.det() != R.reduce(-1)) throw std::invalid_argument("Conjugation: det must be -1");
    if (!(g * g).is_identity()) throw std::invalid_argument("Conjugation: must square to 1");
  }

  const RingCtx& ring() const { return *c.R; }
  Mat2 conj(const Mat2& g) const { return c * g * c; }  // C g C^-1 with C^-1 = C
  Vec2 apply(const Vec2& v) const { return c * v; }
};

// C0 = diag(1, -1), inducing z -> -conj(z).
inline Conjugation std_conjugation(const RingCtx& R) { return Conjugation(Mat2(1, 0, 0, -1, R)); }
// The antidiagonal swap, inducing z -> 1/conj(z).
inline Conjugation inv_conjugation(const RingCtx& R) { return Conjugation(Mat2(0, 1, 1, 0, R)); }

// (Cg)^2 = 1; for det(Cg) = -1 this is equivalent to trace(Cg) = 0.
inline bool is_admissible(const Mat2& g, const Conjugation& conj) {
  return (conj.c * g).trace() == 0;
}

// ---------------------------------------------------------------------------
// Subgroups

enum class Family { full, gamma, gamma1, gamma0, split, custom };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::full: return "full";
    case Family::gamma: return "gamma";
    case Family::gamma1: return "gamma1";
    case Family::gamma0: return "gamma0";
    case Family::split: return "split";
    default: return "custom";
  }
}

constexpr uint64_t kDefaultClosureBudget = 20'000'000;

namespace detail {

// BFS closure of a generating set under multiplication.
inline MatSet close_generators(const RingCtx& R, const std::vector<Mat2>& gens, uint64_t budget) {
  MatSet seen;
  std::vector<Mat2> queue;
  Mat2 id = Mat2::identity(R);
  seen.insert(id);
  queue.push_back(id);
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const Mat2& g : gens) {
      for (const Mat2& p : {queue[i] * g, g * queue[i]}) {
        if (seen.insert(p).second) {
          if (seen.size() > budget) throw budget_error("group closure exceeds element budget");
          queue.push_back(p);
        }
      }
    }
  }
  return seen;
}

// Greedy generating set plus full closure of the group cut out by `accept`,
// found by scanning SL2(Z/N).  Used for predicate-only groups.
inline void closure_by_enumeration(const RingCtx& R, const std::function<bool(const Mat2&)>& accept,
                                   uint64_t budget, std::vector<Mat2>& gens_out,
                                   MatSet& closure_out) {
  MatSet span;
  span.insert(Mat2::identity(R));
  std::vector<Mat2> gens;
  enumerate_sl2(R, [&](const Mat2& g) {
    if (!accept(g) || span.count(g)) return;
    gens.push_back(g);
    span = close_generators(R, gens, budget);
  });
  gens_out = std::move(gens);
  closure_out = std::move(span);
}

// Multiplicative generators of (Z/q)^x, greedily.
inline std::vector<uint32_t> unit_group_generators(uint32_t q) {
  std::vector<uint32_t> gens;
  if (q <= 2) return gens;
  std::vector<char> in(q, 0);
  std::vector<uint32_t> h = {1};
  in[1] = 1;
  for (uint32_t u = 2; u < q; ++u) {
    if (std::gcd(int64_t(u), int64_t(q)) != 1 || in[u]) continue;
    gens.push_back(u);
    for (size_t i = 0; i < h.size(); ++i) {
      uint32_t v = uint32_t(uint64_t(u) * h[i] % q);
      while (!in[v]) {
        in[v] = 1;
        h.push_back(v);
        v = uint32_t(uint64_t(u) * v % q);
      }
    }
  }
  return gens;
}

// The value placed in CRT factor i, `elsewhere` in the others, viewed in Z/N.
inline uint32_t lift_into_factor(const RingCtx& R, const std::vector<uint32_t>& factors, size_t i,
                                 int64_t value, int64_t elsewhere) {
  uint32_t x = 0, m = 1;
  for (size_t j = 0; j < factors.size(); ++j) {
    int64_t want = j == i ? value : elsewhere;
    uint32_t part = uint32_t((want % factors[j] + factors[j]) % factors[j]);
    x = crt_pair(x, m, part, factors[j]);
    m *= factors[j];
  }
  return x % R.modulus();
}

}  // namespace detail

// A subgroup of SL2(Z/N) given by a membership predicate and generators,
// with a lazily computed explicit closure.  Copies share the lazy state;
// concurrent materialization is serialized by a mutex.
class SubgroupSpec {
 public:
  SubgroupSpec(const RingCtx& R, Family label, std::function<bool(const Mat2&)> member,
               std::vector<Mat2> generators, std::shared_ptr<const MatSet> closure = nullptr)
      : R_(&R),
        label_(label),
        member_(std::move(member)),
        generators_(std::move(generators)),
        state_(std::make_shared<LazyState>()) {
    if (closure) {
      state_->closure = std::move(closure);
      state_->done = !generators_.empty();
    }
  }

  const RingCtx& ring() const { return *R_; }
  Family label() const { return label_; }
  bool member(const Mat2& g) const { return member_(g); }
  bool has_generators() const { return !generators_.empty(); }

  // Generators; for predicate-only groups a small generating set is derived
  // from the enumerated closure on first use.
  const std::vector<Mat2>& generators(uint64_t budget = kDefaultClosureBudget) const {
    if (!generators_.empty()) return generators_;
    materialize(budget);
    return state_->derived_gens;
  }

  const MatSet& closure(uint64_t budget = kDefaultClosureBudget) const {
    materialize(budget);
    return *state_->closure;
  }

  uint64_t order(uint64_t budget = kDefaultClosureBudget) const { return closure(budget).size(); }

 private:
  struct LazyState {
    std::mutex mu;
    bool done = false;
    std::shared_ptr<const MatSet> closure;
    std::vector<Mat2> derived_gens;
  };

  void materialize(uint64_t budget) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->done) return;
    if (!generators_.empty()) {
      if (!state_->closure)
        state_->closure =
            std::make_shared<const MatSet>(detail::close_generators(*R_, generators_, budget));
    } else {
      std::vector<Mat2> gens;
      MatSet cl;
      detail::closure_by_enumeration(*R_, member_, budget, gens, cl);
      state_->derived_gens = std::move(gens);
      state_->closure = std::make_shared<const MatSet>(std::move(cl));
    }
    state_->done = true;
  }

  const RingCtx* R_;
  Family label_;
  std::function<bool(const Mat2&)> member_;
  std::vector<Mat2> generators_;
  std::shared_ptr<LazyState> state_;
};

// The five named families.  Membership predicates are O(1); generators are
// kept small so orbit BFS stays cheap.
inline SubgroupSpec family_group(Family f, const RingCtx& R) {
  const uint32_t n = R.modulus();
  Mat2 minus1(-1, 0, 0, -1, R);
  Mat2 unipotent(1, 1, 0, 1, R);
  switch (f) {
    case Family::full: {
      Mat2 s(0, 1, -1, 0, R);
      return SubgroupSpec(R, f, [](const Mat2& g) { return is_unimodular(g); }, {unipotent, s});
    }
    case Family::gamma: {
      Mat2 id = Mat2::identity(R);
      return SubgroupSpec(R, f, [id, minus1](const Mat2& g) { return g == id || g == minus1; },
                          {minus1});
    }
    case Family::gamma1: {
      uint32_t mone = R.reduce(-1);
      return SubgroupSpec(R, f,
                          [mone](const Mat2& g) {
                            return is_unimodular(g) && g.m[2] == 0 &&
                                   (g.m[0] == 1 % g.R->modulus() || g.m[0] == mone) &&
                                   g.m[3] == g.m[0];
                          },
                          {minus1, unipotent});
    }
    case Family::gamma0: {
      std::vector<Mat2> gens = {minus1, unipotent};
      for (uint32_t u : detail::unit_group_generators(n))
        gens.push_back(Mat2(u, 0, 0, R.inv(u), R));
      return SubgroupSpec(R, f, [](const Mat2& g) { return is_unimodular(g) && g.m[2] == 0; }, gens);
    }
    case Family::split: {
      // Normalizer of the diagonal subgroup: diagonal or antidiagonal in
      // every prime-power CRT factor (the direct product of the prime-power
      // groups when N is composite).
      std::vector<uint32_t> factors = R.crt_factors();
      if (factors.empty()) factors.push_back(1);  // N = 1
      std::vector<Mat2> gens = {minus1};
      for (size_t i = 0; i < factors.size(); ++i) {
        for (uint32_t u : detail::unit_group_generators(factors[i])) {
          uint32_t lu = detail::lift_into_factor(R, factors, i, u, 1);
          gens.push_back(Mat2(lu, 0, 0, R.inv(lu), R));
        }
        gens.push_back(Mat2(detail::lift_into_factor(R, factors, i, 0, 1),
                            detail::lift_into_factor(R, factors, i, 1, 0),
                            detail::lift_into_factor(R, factors, i, -1, 0),
                            detail::lift_into_factor(R, factors, i, 0, 1), R));
      }
      return SubgroupSpec(R, f,
                          [factors](const Mat2& g) {
                            if (!is_unimodular(g)) return false;
                            for (uint32_t q : factors) {
                              bool diag = g.m[1] % q == 0 && g.m[2] % q == 0;
                              bool anti = g.m[0] % q == 0 && g.m[3] % q == 0;
                              if (!diag && !anti) return false;
                            }
                            return true;
                          },
                          gens);
    }
    default:
      throw std::invalid_argument("family_group: use custom_group for custom subgroups");
  }
}

// Closure of the given generators together with -1 and their C-conjugates;
// membership is set lookup.
inline SubgroupSpec custom_group(const RingCtx& R, const std::vector<Mat2>& generators,
                                 const Conjugation& conj,
                                 uint64_t budget = kDefaultClosureBudget) {
  std::vector<Mat2> gens = {Mat2(-1, 0, 0, -1, R)};
  for (const Mat2& g : generators) {
    if (!is_unimodular(g)) throw std::invalid_argument("custom_group: generator with det != 1");
    gens.push_back(g);
    gens.push_back(conj.conj(g));
  }
  auto closure = std::make_shared<const MatSet>(detail::close_generators(R, gens, budget));
  auto cl = closure;
  return SubgroupSpec(R, Family::custom, [cl](const Mat2& g) { return cl->count(g) > 0; }, gens,
                      closure);
}

// Inverse image in SL2(Z/N) of a subgroup over Z/N0, N0 | N.  Membership is
// reduction followed by base membership; generators are derived lazily from
// the enumerated closure.
inline SubgroupSpec preimage_group(const SubgroupSpec& g0, const RingCtx& R) {
  const RingCtx& R0 = g0.ring();
  if (R.modulus() % R0.modulus() != 0)
    throw std::invalid_argument("preimage_group: N0 must divide N");
  const RingCtx* base = &R0;
  SubgroupSpec g0copy = g0;
  auto member = [g0copy, base](const Mat2& g) {
    if (!is_unimodular(g)) return false;
    return g0copy.member(Mat2(g.m[0], g.m[1], g.m[2], g.m[3], *base));
  };
  return SubgroupSpec(R, Family::custom, member, {});
}

// Breadth-first orbit of a seed vector under the group action.  Family and
// custom groups act through their generators; predicate-only groups fall
// back to generators derived from the enumerated closure.
inline std::vector<Vec2> orbit(const SubgroupSpec& spec, const Vec2& seed, bool quotient_sign,
                               uint64_t budget = kDefaultClosureBudget) {
  if (!seed.is_basis_vector()) throw std::invalid_argument("orbit: seed must be a basis vector");
  std::unordered_set<uint64_t> seen;
  std::vector<Vec2> out, queue;
  auto push = [&](const Vec2& v) {
    if (seen.insert(v.key()).second) {
      if (seen.size() > budget) throw budget_error("orbit exceeds element budget");
      out.push_back(v);
      queue.push_back(v);
    }
  };
  push(seed);
  if (quotient_sign) push(-seed);
  const std::vector<Mat2>& gens = spec.generators(budget);
  for (size_t i = 0; i < queue.size(); ++i)
    for (const Mat2& g : gens) push(g * queue[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Sanity checks on the (spec, conjugation) pair: -1 present, generators in
// SL2 and C-stable.  Predicate-only groups are checked through their
// derived generators (materializing the closure).
inline void check_real_subgroup(const SubgroupSpec& spec, const Conjugation& conj) {
  const RingCtx& R = spec.ring();
  if (!spec.member(Mat2(-1, 0, 0, -1, R)))
    throw std::invalid_argument("subgroup must contain -1");
  for (const Mat2& g : spec.generators()) {
    if (!is_unimodular(g)) throw std::invalid_argument("generator with det != 1: " + g.str());
    if (!spec.member(g)) throw std::invalid_argument("generator fails membership: " + g.str());
    if (!spec.member(conj.conj(g)))
      throw std::invalid_argument("subgroup not stable under conjugation: " + g.str());
  }
}

}  // namespace xigraph
