#include "k3lat/poly.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace k3lat {

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::parse(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw Error("bad_polynomial", "empty coefficient in \"" + text + "\"");
    if (item.front() == '+') item.erase(item.begin());
    Rational r;
    try {
      if (item.find_first_not_of("-0123456789/") != std::string::npos) throw std::invalid_argument(item);
      r = Rational(item);
      if (r.get_den() == 0) throw std::invalid_argument(item);
    } catch (const std::invalid_argument&) {
      throw Error("bad_polynomial", "cannot parse coefficient \"" + item + "\"");
    }
    r.canonicalize();
    out.push_back(r);
  }
  return RatPoly(std::move(out));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> v = c_;
  Rational l = c_.back();
  for (auto& x : v) x /= l;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(v));
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatPoly RatPoly::reversed(std::size_t k) const {
  if (degree() > static_cast<long>(k)) throw Error("shape", "reversal degree below polynomial degree");
  std::vector<Rational> v(k + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[k - i] = c_[i];
  return RatPoly(std::move(v));
}

std::size_t RatPoly::valuation() const {
  if (is_zero()) throw Error("zero_polynomial", "valuation of the zero polynomial");
  std::size_t k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

std::string RatPoly::to_coeff_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + k3lat::to_string(c_[i]);
  return s;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) s += k3lat::to_string(mag);
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) v[i] += b.coeffs()[i];
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a) { return Rational(-1) * a; }

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return RatPoly(std::move(v));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
  std::vector<Rational> v = a.coeffs();
  for (auto& x : v) x *= s;
  return RatPoly(std::move(v));
}

RatPoly pow(const RatPoly& a, unsigned k) {
  RatPoly r = RatPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error("division_by_zero", "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(a.coeffs().size() - b.coeffs().size() + 1, Rational(0));
  const std::size_t db = b.coeffs().size() - 1;
  const Rational lb = b.lead();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = r[k + db] / lb;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

bool divides(const RatPoly& d, const RatPoly& a) { return divmod(a, d).second.is_zero(); }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_squarefree(const RatPoly& a) { return gcd(a, a.derivative()).degree() == 0; }

long multiplicity(const RatPoly& d, const RatPoly& a) {
  if (d.degree() < 1) throw Error("bad_argument", "multiplicity needs a nonconstant divisor");
  if (a.is_zero()) throw Error("zero_polynomial", "multiplicity in the zero polynomial");
  long m = 0;
  RatPoly x = a;
  for (;;) {
    auto [q, r] = divmod(x, d);
    if (!r.is_zero()) return m;
    x = std::move(q);
    ++m;
  }
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw Error("zero_polynomial", "squarefree decomposition of zero");
  std::vector<RatPoly> out;
  if (p.degree() == 0) return out;
  RatPoly f = p.monic();
  RatPoly fp = f.derivative();
  RatPoly b = gcd(f, fp);
  RatPoly c = divmod(f, b).first;
  RatPoly d = divmod(fp, b).first - c.derivative();
  while (c.degree() > 0) {
    RatPoly a = gcd(c, d);
    out.push_back(a);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

// ------------------------------------------------------- factorization

namespace {

using ZPoly = std::vector<Integer>;
using FpPoly = std::vector<long>;

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Primitive integral multiple with positive leading coefficient.
ZPoly primitive_integral(const RatPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(Integer(c * den));
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

RatPoly to_rat(const ZPoly& z) {
  std::vector<Rational> v;
  for (const auto& c : z) v.emplace_back(c);
  return RatPoly(std::move(v));
}

ZPoly primitive_part(ZPoly z) {
  trim(z);
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

// Exact quotient over Z, or empty when h does not divide g.
bool divide_exact(const ZPoly& g, const ZPoly& h, ZPoly& q) {
  auto [qq, r] = divmod(to_rat(g), to_rat(h));
  if (!r.is_zero()) return false;
  q.clear();
  for (const auto& c : qq.coeffs()) {
    if (c.get_den() != 1) return false;
    q.push_back(c.get_num());
  }
  return true;
}

long mod_p(const Integer& v, long p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw Error("internal", "element not invertible mod p");
  return ((t % p) + p) % p;
}

FpPoly reduce(const ZPoly& z, long p) {
  FpPoly f;
  for (const auto& c : z) f.push_back(mod_p(c, p));
  trim(f);
  return f;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] - b[i] + p) % p;
  trim(c);
  return c;
}

void fp_divmod(const FpPoly& a, const FpPoly& b, long p, FpPoly& q, FpPoly& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  long inv = inv_mod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    long c = r[k + b.size() - 1] * inv % p;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = ((r[k + j] - c * b[j]) % p + p) % p;
  }
  trim(q);
  trim(r);
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b, long p) {
  FpPoly q, r;
  fp_divmod(a, b, p, q, r);
  return r;
}

FpPoly fp_monic(FpPoly a, long p) {
  if (a.empty()) return a;
  long inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// s, t with s a + t b = 1 mod p for coprime a, b.
void fp_bezout(const FpPoly& a, const FpPoly& b, long p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    FpPoly q, r;
    fp_divmod(r0, r1, p, q, r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error("internal", "Hensel factors are not coprime mod p");
  long inv = inv_mod(r0[0], p);
  s = s0;
  t = t0;
  for (auto& c : s) c = c * inv % p;
  for (auto& c : t) c = c * inv % p;
}

FpPoly fp_derivative(const FpPoly& a, long p) {
  FpPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i % p) % p);
  trim(d);
  return d;
}

// Berlekamp splitting of a monic squarefree polynomial over F_p.
std::vector<FpPoly> berlekamp(const FpPoly& f, long p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};
  // row i: x^(i p) mod f
  std::vector<std::vector<long>> q(n, std::vector<long>(n, 0));
  FpPoly xp{1};
  FpPoly base(static_cast<std::size_t>(p) + 1, 0);
  base[p] = 1;
  FpPoly xpp = fp_rem(base, f, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < xp.size(); ++j) q[i][j] = xp[j];
    xp = fp_rem(fp_mul(xp, xpp, p), f, p);
  }
  // left kernel of Q - I: solve (Q - I)^T v = 0
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[j][i] = (q[i][j] - (i == j ? 1 : 0) + p) % p;
  std::vector<int> is_pivot(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pr = row;
    while (pr < n && m[pr][col] == 0) ++pr;
    if (pr == n) continue;
    std::swap(m[pr], m[row]);
    long inv = inv_mod(m[row][col], p);
    for (auto& v : m[row]) v = v * inv % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      long c = m[r][col];
      for (std::size_t k = 0; k < n; ++k) m[r][k] = ((m[r][k] - c * m[row][k]) % p + p) % p;
    }
    is_pivot[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<FpPoly> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free] >= 0) continue;
    FpPoly v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col)
      if (is_pivot[col] >= 0) v[col] = (p - m[is_pivot[col]][free]) % p;
    trim(v);
    kernel.push_back(v);
  }
  const std::size_t r = kernel.size();
  std::vector<FpPoly> factors{f};
  for (const auto& v : kernel) {
    if (factors.size() == r) break;
    if (v.size() <= 1) continue;  // constants do not split
    std::vector<FpPoly> next;
    for (const auto& g : factors) {
      if (g.size() == 2) {
        next.push_back(g);
        continue;
      }
      // g = prod_s gcd(g, v - s)
      for (long c = 0; c < p; ++c) {
        FpPoly vs = v;
        vs[0] = (vs[0] - c + p) % p;
        trim(vs);
        FpPoly h = fp_gcd(g, vs, p);
        if (h.size() > 1) next.push_back(h);
      }
    }
    factors = std::move(next);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

// ---- arithmetic on integer polynomials modulo m

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

ZPoly z_mod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  trim(a);
  return a;
}

ZPoly z_from_fp(const FpPoly& f) {
  ZPoly z;
  for (long c : f) z.emplace_back(c);
  return z;
}

// g = lc * a * b mod p, a b monic; returns lifts mod `modulus`.
void hensel_pair(const ZPoly& g, ZPoly& a, ZPoly& b, long p, const Integer& modulus) {
  const Integer& lc = g.back();
  long lc_inv = inv_mod(mod_p(lc, p), p);
  FpPoly ap = reduce(a, p), bp = reduce(b, p), s, t;
  fp_bezout(ap, bp, p, s, t);
  Integer m = p;
  while (m < modulus) {
    ZPoly ab = z_mul(a, b);
    ZPoly e(std::max(g.size(), ab.size()), Integer(0));
    for (std::size_t i = 0; i < g.size(); ++i) e[i] += g[i];
    for (std::size_t i = 0; i < ab.size(); ++i) e[i] -= lc * ab[i];
    for (auto& c : e) {
      if (c % m != 0) throw Error("internal", "Hensel step lost exactness");
      c /= m;
    }
    trim(e);
    FpPoly ep = reduce(e, p);
    for (auto& c : ep) c = c * lc_inv % p;
    FpPoly da = fp_rem(fp_mul(ep, t, p), ap, p);
    FpPoly db = fp_rem(fp_mul(ep, s, p), bp, p);
    ZPoly dza = z_from_fp(da), dzb = z_from_fp(db);
    for (std::size_t i = 0; i < dza.size(); ++i) a[i] += m * dza[i];
    for (std::size_t i = 0; i < dzb.size(); ++i) b[i] += m * dzb[i];
    m *= p;
  }
  a = z_mod(a, modulus);
  b = z_mod(b, modulus);
}

// Lift g = lc * prod fs (mod p) to monic factors mod `modulus`.
std::vector<ZPoly> hensel_lift(const ZPoly& g, const std::vector<FpPoly>& fs, long p, const Integer& modulus) {
  if (fs.size() == 1) {
    Integer lc_inv;
    Integer lc = g.back();
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly f = g;
    for (auto& c : f) c *= lc_inv;
    return {z_mod(f, modulus)};
  }
  std::size_t h = fs.size() / 2;
  FpPoly pa{1}, pb{1};
  for (std::size_t i = 0; i < h; ++i) pa = fp_mul(pa, fs[i], p);
  for (std::size_t i = h; i < fs.size(); ++i) pb = fp_mul(pb, fs[i], p);
  ZPoly a = z_from_fp(pa), b = z_from_fp(pb);
  hensel_pair(g, a, b, p, modulus);
  std::vector<FpPoly> left(fs.begin(), fs.begin() + h), right(fs.begin() + h, fs.end());
  auto la = hensel_lift(a, left, p, modulus);
  auto lb = hensel_lift(b, right, p, modulus);
  la.insert(la.end(), lb.begin(), lb.end());
  return la;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

bool is_squarefree_mod(const ZPoly& g, long p) {
  FpPoly f = reduce(g, p);
  if (f.size() != g.size()) return false;
  FpPoly d = fp_derivative(f, p);
  if (d.empty()) return false;
  return fp_gcd(f, d, p).size() == 1;
}

std::vector<long> small_primes() {
  std::vector<long> out;
  for (long n = 3; n < 2000; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

// Irreducible factors of a primitive squarefree integer polynomial.
std::vector<ZPoly> zassenhaus(const ZPoly& g0) {
  const std::size_t n = g0.size() - 1;
  if (n <= 1) return {g0};

  long best_p = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (long p : small_primes()) {
    if (mod_p(g0.back(), p) == 0 || !is_squarefree_mod(g0, p)) continue;
    auto fs = berlekamp(fp_monic(reduce(g0, p), p), p);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = fs;
    }
    if (best.size() == 1 || ++tried == 5) break;
  }
  if (best_p == 0) throw Error("internal", "no suitable prime for factorization");
  if (best.size() == 1) return {g0};
  const long p = best_p;

  // coefficient bound for factors of g0 (Mignotte), times |lc|
  Integer norm2 = 0;
  for (const auto& c : g0) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound <<= n;
  bound *= abs(g0.back());
  Integer modulus = p;
  while (modulus <= 2 * bound) modulus *= p;

  std::vector<ZPoly> lifted = hensel_lift(g0, best, p, modulus);
  std::vector<ZPoly> found;
  ZPoly g = g0;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{g.back()};
      for (std::size_t i : idx) cand = z_mod(z_mul(cand, lifted[i]), modulus);
      ZPoly h = primitive_part(symmetric(cand, modulus));
      ZPoly q;
      if (h.size() > 1 && divide_exact(g, h, q)) {
        found.push_back(h);
        g = q;
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + idx[k]);
        progress = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++s;
  }
  if (g.size() > 1) found.push_back(primitive_part(g));
  return found;
}

bool poly_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                      b.coeffs().rend());
}

}  // namespace

Factorization factor(const RatPoly& p) {
  if (p.is_zero()) throw Error("zero_polynomial", "cannot factor the zero polynomial");
  Factorization out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (const auto& z : zassenhaus(primitive_integral(parts[i])))
      out.factors.emplace_back(to_rat(z), static_cast<long>(i + 1));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  Rational prod_lead = 1;
  for (const auto& [f, m] : out.factors)
    for (long k = 0; k < m; ++k) prod_lead *= f.lead();
  out.unit = p.lead() / prod_lead;
  return out;
}

}  // namespace k3lat
