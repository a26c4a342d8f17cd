#pragma once

// Exact arithmetic in Z/N: ring context with 2-adic decomposition, CRT
// factors, unit utilities and the arithmetic functions phi and psi.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace xigraph {

using std::int64_t;
using std::uint32_t;
using std::uint64_t;

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Prime-power factorization by trial division.  N is desk-scale.
inline std::vector<std::pair<uint32_t, uint32_t>> factorize(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> out;  // (p, p^e)
  for (uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      uint32_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      out.emplace_back(p, q);
    }
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

// |(Z/N)^x| from the prime factorization.
inline uint64_t phi(uint32_t n) {
  if (n == 0) throw std::invalid_argument("phi: N must be >= 1");
  uint64_t r = 1;
  for (auto [p, q] : factorize(n)) r *= uint64_t(q) - q / p;
  return r;
}

// |(Z/N)^x / <-1, 2>| for odd N, by explicit subgroup closure.
inline uint64_t psi(uint32_t n) {
  if (n == 0) throw std::invalid_argument("psi: N must be >= 1");
  if (n % 2 == 0) throw std::invalid_argument("psi: defined for odd N only");
  if (n == 1) return 1;
  std::vector<char> in(n, 0);
  std::vector<uint32_t> h = {1};
  in[1] = 1;
  for (size_t i = 0; i < h.size(); ++i) {
    for (uint64_t g : {uint64_t(n - 1), uint64_t(2)}) {
      uint32_t v = uint32_t(g * h[i] % n);
      if (!in[v]) {
        in[v] = 1;
        h.push_back(v);
      }
    }
  }
  return phi(n) / h.size();
}

// Immutable context for Z/N.  Holds N = 2^r * N', the 2-torsion element
// t = 2^{r-1} N' (zero when r = 0), and the prime-power CRT factors.
class RingCtx {
 public:
  explicit RingCtx(uint32_t modulus) : n_(modulus) {
    if (modulus == 0) throw std::invalid_argument("RingCtx: N must be >= 1");
    odd_part_ = modulus;
    two_exponent_ = 0;
    while (odd_part_ % 2 == 0) {
      odd_part_ /= 2;
      ++two_exponent_;
    }
    two_torsion_ = two_exponent_ >= 1 ? n_ / 2 : 0;
    for (auto [p, q] : factorize(modulus)) crt_factors_.push_back(q);
  }

  uint32_t modulus() const { return n_; }
  uint32_t odd_part() const { return odd_part_; }
  int two_exponent() const { return two_exponent_; }
  bool has_two_torsion() const { return two_exponent_ >= 1; }
  // The unique nonzero element killed by 2; only meaningful when r >= 1.
  uint32_t two_torsion() const { return two_torsion_; }
  const std::vector<uint32_t>& crt_factors() const { return crt_factors_; }

  uint32_t reduce(int64_t v) const {
    int64_t r = v % int64_t(n_);
    return uint32_t(r < 0 ? r + n_ : r);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + n_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : n_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t(uint64_t(a) * b % n_); }
  bool is_unit(uint32_t a) const { return std::gcd(int64_t(a), int64_t(n_)) == 1; }

  // Inverse of a unit; throws for non-units.
  uint32_t inv(uint32_t a) const {
    int64_t g, x;
    ext_gcd(int64_t(a), int64_t(n_), g, x);
    if (g != 1) throw std::invalid_argument("inv: not a unit mod " + std::to_string(n_));
    return reduce(x);
  }

  bool operator==(const RingCtx& o) const { return n_ == o.n_; }

  // g = gcd(a, n), x with a*x == g (mod n).
  static void ext_gcd(int64_t a, int64_t b, int64_t& g, int64_t& x) {
    int64_t x0 = 1, x1 = 0;
    while (b != 0) {
      int64_t q = a / b;
      int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    g = a;
    x = x0;
  }

 private:
  uint32_t n_;
  uint32_t odd_part_;
  int two_exponent_;
  uint32_t two_torsion_;
  std::vector<uint32_t> crt_factors_;
};

// Canonical representative in [0, N); arithmetic reduces eagerly.
struct Residue {
  uint32_t value = 0;
  const RingCtx* ctx = nullptr;

  Residue() = default;
  Residue(int64_t v, const RingCtx& r) : value(r.reduce(v)), ctx(&r) {}

  Residue operator+(Residue o) const { return wrap(ctx->add(value, o.value)); }
  Residue operator-(Residue o) const { return wrap(ctx->sub(value, o.value)); }
  Residue operator*(Residue o) const { return wrap(ctx->mul(value, o.value)); }
  Residue operator-() const { return wrap(ctx->neg(value)); }
  Residue inverse() const { return wrap(ctx->inv(value)); }
  bool is_unit() const { return ctx->is_unit(value); }
  bool operator==(const Residue& o) const { return value == o.value; }
  bool operator<(const Residue& o) const { return value < o.value; }

 private:
  Residue wrap(uint32_t v) const {
    Residue r;
    r.value = v;
    r.ctx = ctx;
    return r;
  }
};

// One RingCtx per prime-power factor; componentwise reduction is a ring
// isomorphism Z/N -> prod Z/p^e.
inline std::vector<RingCtx> crt_split(const RingCtx& ctx) {
  std::vector<RingCtx> out;
  for (uint32_t q : ctx.crt_factors()) out.emplace_back(q);
  return out;
}

// x == a (mod m), x == b (mod k) for coprime m, k.
inline uint32_t crt_pair(uint32_t a, uint32_t m, uint32_t b, uint32_t k) {
  int64_t g, minv;
  RingCtx::ext_gcd(int64_t(m % k), int64_t(k), g, minv);
  if (g != 1) throw std::invalid_argument("crt_pair: moduli not coprime");
  uint64_t mk = uint64_t(m) * k;
  uint64_t diff = (uint64_t(b) + k - a % k) % k;
  uint64_t t = diff * uint64_t((minv % int64_t(k) + k) % k) % k;
  return uint32_t((a + uint64_t(m) * t) % mk);
}

// Lift one residue per crt factor back to Z/N.
inline uint32_t crt_lift(const RingCtx& ctx, const std::vector<uint32_t>& parts) {
  const auto& f = ctx.crt_factors();
  if (parts.size() != f.size()) throw std::invalid_argument("crt_lift: arity mismatch");
  uint32_t x = 0, m = 1;
  for (size_t i = 0; i < f.size(); ++i) {
    x = crt_pair(x, m, parts[i] % f[i], f[i]);
    m *= f[i];
  }
  return x % ctx.modulus();
}

}  // namespace xigraph
