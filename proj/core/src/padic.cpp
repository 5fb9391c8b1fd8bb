#include "ahull/padic.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace ahull {

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce_mod(const Integer& c, u64 p) {
  Integer r = mod(c, Integer(std::to_string(p)));
  return std::stoull(r.get_str());
}

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly reduce_poly(const IntPolynomial& f, u64 p) {
  FpPoly r;
  for (const auto& c : f.coefficients()) r.push_back(reduce_mod(c, p));
  trim(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  if (deg(a) < deg(b)) return {{}, a};
  const u64 inv = invmod(b.back(), p);
  FpPoly q(a.size() - b.size() + 1, 0);
  for (int i = deg(a); i >= deg(b); --i) {
    const u64 c = mulmod(a[static_cast<std::size_t>(i)], inv, p);
    q[static_cast<std::size_t>(i - deg(b))] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& t = a[static_cast<std::size_t>(i - deg(b)) + j];
      t = (t + p - mulmod(c, b[j], p)) % p;
    }
  }
  trim(q);
  trim(a);
  return {q, a};
}

FpPoly rem(const FpPoly& a, const FpPoly& b, u64 p) { return divmod(a, b, p).second; }

FpPoly monic(FpPoly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

FpPoly gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

FpPoly derivative(const FpPoly& a, u64 p) {
  FpPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], i % p, p));
  trim(d);
  return d;
}

FpPoly powmod_poly(FpPoly base, Integer e, const FpPoly& m, u64 p) {
  FpPoly r{1};
  r = rem(r, m, p);
  base = rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base, p), m, p);
    e >>= 1;
    if (e > 0) base = rem(mul(base, base, p), m, p);
  }
  return r;
}

Integer to_integer(u64 v) { return Integer(std::to_string(v)); }

std::vector<u64> prime_factors(unsigned n) {
  std::vector<u64> fs;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

/// Rabin's test for a monic polynomial mod p.
bool irreducible_mod_p(const FpPoly& w, u64 p) {
  const int n = deg(w);
  if (n <= 0) return false;
  if (n == 1) return true;
  const FpPoly x{0, 1};
  const Integer P = to_integer(p);
  for (u64 q : prime_factors(static_cast<unsigned>(n))) {
    const FpPoly h = powmod_poly(x, ipow(P, static_cast<unsigned long>(n) / q), w, p);
    if (deg(gcd(w, sub(h, x, p), p)) != 0) return false;
  }
  return sub(powmod_poly(x, ipow(P, static_cast<unsigned long>(n)), w, p), x, p).empty();
}

// ---------------------------------------------------------------------------
// The residue field GF(p^f) = F_p[t]/(w) and polynomials over it.

struct Field {
  u64 p;
  unsigned f;
  FpPoly w;

  using Elem = FpPoly;  // length exactly f

  Elem zero() const { return Elem(f, 0); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1 % p;
    return e;
  }
  Elem constant(u64 c) const {
    Elem e = zero();
    e[0] = c % p;
    return e;
  }
  bool is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
  }
  Elem pad(FpPoly a) const {
    a.resize(f, 0);
    return a;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(f);
    for (unsigned i = 0; i < f; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(f);
    for (unsigned i = 0; i < f; ++i) r[i] = (a[i] + p - b[i]) % p;
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    FpPoly x = a, y = b;
    trim(x);
    trim(y);
    return pad(rem(ahull::mul(x, y, p), w, p));
  }
  Elem pow(Elem a, Integer e) const {
    Elem r = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
      e >>= 1;
      if (e > 0) a = mul(a, a);
    }
    return r;
  }
  Integer order() const { return ipow(to_integer(p), f); }
  Elem inv(const Elem& a) const { return pow(a, order() - 2); }
  Elem random(std::mt19937_64& rng) const {
    Elem e(f);
    for (auto& c : e) c = rng() % p;
    return e;
  }
};

using FqPoly = std::vector<Field::Elem>;

void trim(const Field& F, FqPoly& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

FqPoly fq_mul(const Field& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(F, r);
  return r;
}

std::pair<FqPoly, FqPoly> fq_divmod(const Field& F, FqPoly a, const FqPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial over GF(q)");
  if (a.size() < b.size()) return {{}, a};
  const auto inv = F.inv(b.back());
  FqPoly q(a.size() - b.size() + 1, F.zero());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const auto c = F.mul(a[i], inv);
    q[i - (b.size() - 1)] = c;
    if (F.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& t = a[i - (b.size() - 1) + j];
      t = F.sub(t, F.mul(c, b[j]));
    }
  }
  trim(F, q);
  trim(F, a);
  return {q, a};
}

FqPoly fq_monic(const Field& F, FqPoly a) {
  if (a.empty()) return a;
  const auto inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

FqPoly fq_gcd(const Field& F, FqPoly a, FqPoly b) {
  while (!b.empty()) {
    FqPoly r = fq_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fq_monic(F, a);
}

FqPoly fq_powmod(const Field& F, FqPoly base, Integer e, const FqPoly& m) {
  FqPoly r{F.one()};
  r = fq_divmod(F, r, m).second;
  base = fq_divmod(F, base, m).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fq_divmod(F, fq_mul(F, r, base), m).second;
    e >>= 1;
    if (e > 0) base = fq_divmod(F, fq_mul(F, base, base), m).second;
  }
  return r;
}

/// All roots of a monic squarefree polynomial that splits into linear factors over F.
void split_roots(const Field& F, const FqPoly& g, std::mt19937_64& rng, std::vector<Field::Elem>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(F.sub(F.zero(), F.mul(g[0], F.inv(g[1]))));
    return;
  }
  const Integer q = F.order();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    FqPoly h;
    if (F.p == 2) {
      // Absolute trace of a*x: sum of (a x)^(2^i) for i < log2 q.
      const FqPoly ax{F.zero(), F.random(rng)};
      FqPoly term = fq_divmod(F, ax, g).second;
      h = term;
      const unsigned m = F.f;
      for (unsigned i = 1; i < m; ++i) {
        term = fq_divmod(F, fq_mul(F, term, term), g).second;
        h.resize(std::max(h.size(), term.size()), F.zero());
        for (std::size_t j = 0; j < term.size(); ++j) h[j] = F.add(h[j], term[j]);
        trim(F, h);
      }
    } else {
      const FqPoly xa{F.random(rng), F.one()};
      h = fq_powmod(F, xa, (q - 1) / 2, g);
      if (h.empty()) h.push_back(F.zero());
      h[0] = F.sub(h[0], F.one());
      trim(F, h);
    }
    const FqPoly d = fq_gcd(F, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(F, d, rng, out);
      split_roots(F, fq_monic(F, fq_divmod(F, g, d).first), rng, out);
      return;
    }
  }
  throw std::runtime_error("equal-degree splitting did not terminate");
}

Integer residue_key(const Field::Elem& e, u64 p) {
  Integer key(0), base(1);
  const Integer P = to_integer(p);
  for (u64 c : e) {
    key += base * to_integer(c);
    base *= P;
  }
  return key;
}

PadicElement evaluate(const IntPolynomial& f, const PadicElement& x) {
  PadicElement acc(x.ring());
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + PadicElement::from_integer(x.ring(), *it);
  return acc;
}

/// Precision ladder ending at `to`, each step at most doubling, starting above `from`.
std::vector<unsigned> doubling_ladder(unsigned from, unsigned to) {
  std::vector<unsigned> ks;
  for (unsigned v = to; v > from; v = (v + 1) / 2) ks.push_back(v);
  std::reverse(ks.begin(), ks.end());
  return ks;
}

PadicElement hensel_lift(const IntPolynomial& f, const PadicElement& start, unsigned from, const RingPtr& target) {
  const IntPolynomial df = f.derivative();
  PadicElement a = start;
  for (unsigned k : doubling_ladder(from, target->precision())) {
    const RingPtr r = k == target->precision() ? target : target->with_precision(k);
    a = a.in_ring(r);
    a -= evaluate(f, a) * evaluate(df, a).inverse();
  }
  return a.in_ring(target);
}

void check_monic(const IntPolynomial& f) {
  if (f.degree() < 1 || f.leading() != 1) throw std::invalid_argument("polynomial must be monic of degree >= 1");
}

}  // namespace

// ---------------------------------------------------------------------------

UnramifiedRing::UnramifiedRing(std::uint64_t p, unsigned k, IntPolynomial omega)
    : p_(p), k_(k), modulus_(ipow(to_integer(p), k)), omega_(std::move(omega)) {
  if (k_ == 0) throw std::invalid_argument("precision must be at least 1");
  if (omega_.degree() < 1 || omega_.leading() != 1) throw std::invalid_argument("omega must be monic of degree >= 1");
}

RingPtr UnramifiedRing::with_precision(unsigned k) const {
  return std::make_shared<const UnramifiedRing>(p_, k, omega_);
}

PadicElement::PadicElement(RingPtr ring) : ring_(std::move(ring)), c_(ring_->degree(), Integer(0)) {}

PadicElement::PadicElement(RingPtr ring, std::vector<Integer> coefficients)
    : ring_(std::move(ring)), c_(std::move(coefficients)) {
  if (c_.size() > ring_->degree()) {
    // Reduce modulo omega.
    const auto& w = ring_->omega().coefficients();
    const std::size_t f = ring_->degree();
    for (std::size_t i = c_.size(); i-- > f;) {
      if (c_[i] == 0) continue;
      const Integer t = c_[i];
      for (std::size_t j = 0; j < f; ++j) c_[i - f + j] -= t * w[j];
    }
  }
  c_.resize(ring_->degree(), Integer(0));
  for (auto& v : c_) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), ring_->modulus().get_mpz_t());
}

PadicElement PadicElement::from_integer(RingPtr ring, const Integer& c) {
  return PadicElement(std::move(ring), std::vector<Integer>{c});
}

PadicElement PadicElement::generator(RingPtr ring) {
  return PadicElement(std::move(ring), std::vector<Integer>{Integer(0), Integer(1)});
}

bool PadicElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
}

PadicElement& PadicElement::operator+=(const PadicElement& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= ring_->modulus()) c_[i] -= ring_->modulus();
  }
  return *this;
}

PadicElement& PadicElement::operator-=(const PadicElement& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += ring_->modulus();
  }
  return *this;
}

PadicElement operator*(const PadicElement& a, const PadicElement& b) {
  const std::size_t f = a.c_.size();
  if (f == 1) {
    Integer v = a.c_[0] * b.c_[0];
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), a.ring_->modulus().get_mpz_t());
    PadicElement r(a.ring_);
    r.c_[0] = std::move(v);
    return r;
  }
  std::vector<Integer> c(2 * f - 1, Integer(0));
  for (std::size_t i = 0; i < f; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < f; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PadicElement(a.ring_, std::move(c));
}

PadicElement operator*(const Integer& c, const PadicElement& a) {
  std::vector<Integer> v = a.c_;
  for (auto& x : v) x *= c;
  return PadicElement(a.ring_, std::move(v));
}

bool operator==(const PadicElement& a, const PadicElement& b) {
  return a.ring_->modulus() == b.ring_->modulus() && a.c_ == b.c_;
}

PadicElement PadicElement::pow(const Integer& e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  PadicElement r = from_integer(ring_, Integer(1));
  PadicElement b = *this;
  Integer x = e;
  while (x > 0) {
    if (mpz_odd_p(x.get_mpz_t())) r = r * b;
    x >>= 1;
    if (x > 0) b = b * b;
  }
  return r;
}

PadicElement PadicElement::inverse() const {
  const RingPtr r1 = ring_->precision() == 1 ? ring_ : ring_->with_precision(1);
  const PadicElement a1 = in_ring(r1);
  if (a1.is_zero()) throw std::domain_error("element is not a unit");
  const Integer q = ipow(to_integer(ring_->p()), ring_->degree());
  PadicElement v = a1.pow(q - 2);
  for (unsigned k : doubling_ladder(1, ring_->precision())) {
    const RingPtr rk = k == ring_->precision() ? ring_ : ring_->with_precision(k);
    v = v.in_ring(rk);
    v = v * (from_integer(rk, Integer(2)) - in_ring(rk) * v);
  }
  return v.in_ring(ring_);
}

PadicElement PadicElement::in_ring(const RingPtr& other) const {
  if (other->omega() != ring_->omega()) throw std::invalid_argument("rings have different defining polynomials");
  return PadicElement(other, c_);
}

std::optional<unsigned> valuation(const Integer& x, std::uint64_t p, unsigned k) {
  Integer v = x;
  const Integer P = to_integer(p);
  unsigned m = 0;
  if (v == 0) return std::nullopt;
  while (m < k && mpz_divisible_p(v.get_mpz_t(), P.get_mpz_t())) {
    v /= P;
    ++m;
  }
  if (m >= k) return std::nullopt;
  return m;
}

std::optional<unsigned> valuation(const PadicElement& x) {
  std::optional<unsigned> best;
  for (const auto& c : x.coefficients()) {
    const auto v = valuation(c, x.ring()->p(), x.ring()->precision());
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

bool is_admissible_prime(const IntPolynomial& f, std::uint64_t p) {
  if (f.degree() < 1 || !is_probable_prime(p)) return false;
  if (reduce_mod(f.leading(), p) == 0) return false;
  const FpPoly fb = reduce_poly(f, p);
  return deg(gcd(fb, derivative(fb, p), p)) == 0;
}

std::vector<unsigned> factor_degrees(const IntPolynomial& f, std::uint64_t p) {
  if (!is_admissible_prime(f, p)) {
    throw std::invalid_argument("polynomial is not squarefree mod " + std::to_string(p));
  }
  FpPoly g = monic(reduce_poly(f, p), p);
  std::vector<unsigned> degs;
  const FpPoly x{0, 1};
  FpPoly h = rem(x, g, p);
  const Integer P = to_integer(p);
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(deg(g)); ++d) {
    h = powmod_poly(h, P, g, p);
    const FpPoly c = gcd(g, sub(h, x, p), p);
    if (deg(c) > 0) {
      for (int i = 0; i < deg(c) / static_cast<int>(d); ++i) degs.push_back(d);
      g = divmod(g, c, p).first;
      h = rem(h, g, p);
    }
  }
  if (deg(g) > 0) degs.push_back(static_cast<unsigned>(deg(g)));
  std::sort(degs.begin(), degs.end());
  return degs;
}

PrimeSelection prime_selection_for(const IntPolynomial& f, std::uint64_t p) {
  PrimeSelection s;
  s.p = p;
  s.factor_degrees = factor_degrees(f, p);
  Integer l(1);
  for (unsigned d : s.factor_degrees) l = lcm(l, Integer(d));
  s.f_p = static_cast<unsigned>(l.get_ui());
  return s;
}

PrimeSelection select_prime(const IntPolynomial& f, unsigned search_limit, std::optional<std::uint64_t> floor) {
  if (f.degree() < 1) throw std::invalid_argument("prime selection needs degree >= 1");
  std::uint64_t p = floor.value_or(static_cast<std::uint64_t>(f.degree()));
  std::optional<PrimeSelection> best;
  unsigned seen = 0;
  // Inadmissible primes divide the discriminant, so only finitely many are skipped.
  for (unsigned scanned = 0; seen < search_limit && scanned < 100000; ++scanned) {
    p = next_prime(p);
    if (!is_admissible_prime(f, p)) continue;
    ++seen;
    PrimeSelection s = prime_selection_for(f, p);
    if (!best || s.f_p < best->f_p) best = std::move(s);
  }
  if (!best) throw std::runtime_error("no admissible prime found; is the polynomial squarefree?");
  return *best;
}

RingPtr build_unramified(std::uint64_t p, unsigned f_p, unsigned k, std::uint64_t seed) {
  if (f_p == 0 || k == 0) throw std::invalid_argument("build_unramified needs f_p >= 1 and k >= 1");
  if (f_p == 1) return std::make_shared<const UnramifiedRing>(p, k, IntPolynomial{Integer(0), Integer(1)});
  std::mt19937_64 rng(seed);
  while (true) {
    FpPoly w(f_p + 1);
    for (unsigned i = 0; i < f_p; ++i) w[i] = rng() % p;
    w[f_p] = 1;
    if (!irreducible_mod_p(w, p)) continue;
    std::vector<Integer> c;
    for (u64 v : w) c.push_back(to_integer(v));
    return std::make_shared<const UnramifiedRing>(p, k, IntPolynomial(std::move(c)));
  }
}

ApproxRoots ApproxRoots::truncate(unsigned k) const {
  const RingPtr r = ring->with_precision(k);
  ApproxRoots out{r, {}, f};
  for (const auto& a : roots) out.roots.push_back(a.in_ring(r));
  return out;
}

ApproxRoots lift_roots(const IntPolynomial& f, const RingPtr& ring, std::uint64_t seed) {
  check_monic(f);
  const u64 p = ring->p();
  if (!is_admissible_prime(f, p)) {
    throw std::invalid_argument("polynomial is not squarefree mod " + std::to_string(p));
  }
  Field F{p, ring->degree(), reduce_poly(ring->omega(), p)};
  FqPoly g;
  for (u64 c : reduce_poly(f, p)) g.push_back(F.constant(c));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Field::Elem> res;
  split_roots(F, fq_monic(F, g), rng, res);
  if (res.size() != static_cast<std::size_t>(f.degree())) {
    throw std::runtime_error("polynomial does not split in the unramified extension");
  }
  std::sort(res.begin(), res.end(),
            [p](const Field::Elem& a, const Field::Elem& b) { return residue_key(a, p) < residue_key(b, p); });
  const RingPtr r1 = ring->with_precision(1);
  ApproxRoots out{ring, {}, f};
  for (const auto& e : res) {
    std::vector<Integer> c;
    for (u64 v : e) c.push_back(to_integer(v));
    out.roots.push_back(hensel_lift(f, PadicElement(r1, std::move(c)), 1, ring));
  }
  return out;
}

ApproxRoots increase_precision(const ApproxRoots& roots, unsigned k) {
  if (k <= roots.precision()) return roots.truncate(k);
  const RingPtr r = roots.ring->with_precision(k);
  ApproxRoots out{r, {}, roots.f};
  for (const auto& a : roots.roots) out.roots.push_back(hensel_lift(roots.f, a, roots.precision(), r));
  return out;
}

PadicElement eval_target(const ExponentPolynomial& g, const ApproxRoots& roots, const Permutation* sigma) {
  if (g.num_vars() > roots.size()) throw std::out_of_range("target uses more variables than there are roots");
  if (sigma && sigma->size() != roots.size()) throw std::invalid_argument("permutation degree mismatch");
  PadicElement acc(roots.ring);
  for (const auto& t : g.terms()) {
    PadicElement term = PadicElement::from_integer(roots.ring, t.coefficient);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      const auto& a = roots.roots[sigma ? (*sigma)[i] : i];
      term = term * (t.exponents[i] == 1 ? a : a.pow(Integer(t.exponents[i])));
    }
    acc += term;
  }
  return acc;
}

Permutation frobenius_perm(const ApproxRoots& roots) {
  const ApproxRoots low = roots.truncate(1);
  const Integer P = to_integer(roots.ring->p());
  Permutation sigma(low.size());
  for (std::size_t i = 0; i < low.size(); ++i) {
    const PadicElement img = low.roots[i].pow(P);
    std::size_t hits = 0;
    for (std::size_t j = 0; j < low.size(); ++j) {
      if (low.roots[j] == img) {
        sigma[i] = j;
        ++hits;
      }
    }
    if (hits != 1) throw std::runtime_error("Frobenius image does not match a unique root");
  }
  return sigma;
}

std::optional<Integer> symmetric_integer(const PadicElement& x) {
  const auto& c = x.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  Integer v = c[0];
  if (2 * v > x.ring()->modulus()) v -= x.ring()->modulus();
  return v;
}

bool is_irreducible(const IntPolynomial& f, std::uint64_t seed) {
  check_monic(f);
  const int n = f.degree();
  if (n == 1) return true;
  const RatPolynomial fq = to_rational(f);
  if (gcd(fq, fq.derivative()).degree() > 0) return false;
  const PrimeSelection sel = select_prime(f);
  if (sel.factor_degrees.size() == 1) return true;
  Integer cauchy(0);
  for (const auto& c : f.coefficients()) cauchy = std::max(cauchy, Integer(abs(c)));
  // Coefficients of a monic factor of degree d are bounded by (1 + root bound)^d.
  const Integer bound = 2 * ipow(cauchy + 2, static_cast<unsigned long>(n));
  unsigned k = 1;
  while (ipow(to_integer(sel.p), k) <= bound) ++k;
  const ApproxRoots roots = lift_roots(f, build_unramified(sel.p, sel.f_p, k, seed), seed);
  const RingPtr& R = roots.ring;
  const auto un = static_cast<unsigned>(n);
  for (std::uint32_t mask = 1; mask < (1U << un); ++mask) {
    const auto d = static_cast<unsigned>(__builtin_popcount(mask));
    if (2 * d > un || (2 * d == un && !(mask & 1U))) continue;
    std::vector<PadicElement> prod{PadicElement::from_integer(R, Integer(1))};
    for (unsigned i = 0; i < un; ++i) {
      if (!(mask & (1U << i))) continue;
      std::vector<PadicElement> next(prod.size() + 1, PadicElement(R));
      for (std::size_t j = 0; j < prod.size(); ++j) {
        next[j + 1] += prod[j];
        next[j] -= roots.roots[i] * prod[j];
      }
      prod = std::move(next);
    }
    std::vector<Integer> coeffs;
    bool rational = true;
    for (const auto& c : prod) {
      auto v = symmetric_integer(c);
      if (!v) {
        rational = false;
        break;
      }
      coeffs.push_back(*v);
    }
    if (!rational) continue;
    const IntPolynomial g(std::move(coeffs));
    if (divmod(fq, to_rational(g)).second.is_zero()) return false;
  }
  return true;
}

}  // namespace ahull
