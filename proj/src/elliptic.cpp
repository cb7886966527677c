#include "k3lat/elliptic.hpp"

#include <map>
#include <random>
#include <sstream>

#include "k3lat/enumerate.hpp"

namespace k3lat {

WeierstrassFibration::WeierstrassFibration(RatPoly a, RatPoly b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.degree() > 4) throw Error("degree_bound", "deg a must be at most 4");
  if (b_.degree() > 8) throw Error("degree_bound", "deg b must be at most 8");
  disc_ = b_ * b_ * nodal_factor();
  if (disc_.is_zero()) throw Error("degenerate", "discriminant vanishes identically");
}

RatPoly discriminant(const WeierstrassFibration& f) { return f.discriminant(); }

long FiberReport::weight(long n) const {
  long w = 0;
  for (const auto& p : places)
    if (p.n() == n) w += p.degree;
  return w;
}

long FiberReport::weight_on_b(long n) const {
  long w = 0;
  for (const auto& p : places)
    if (p.n() == n && p.divides_b) w += p.degree;
  return w;
}

long FiberReport::weight_on_nodal(long n) const {
  long w = 0;
  for (const auto& p : places)
    if (p.n() == n && p.divides_nodal) w += p.degree;
  return w;
}

long FiberReport::infinity_type() const {
  for (const auto& p : places)
    if (p.at_infinity) return p.n();
  return 0;
}

std::vector<std::pair<long, long>> FiberReport::fiber_counts() const {
  std::map<long, long> m;
  for (const auto& p : places)
    if (p.multiplicative) m[p.order] += p.degree;
  return {m.rbegin(), m.rend()};
}

FiberReport fiber_configuration(const WeierstrassFibration& f) {
  FiberReport r;
  const RatPoly nodal = f.nodal_factor();
  for (const auto& [p, m] : factor(f.discriminant()).factors) {
    Place pl;
    pl.factor = p;
    pl.degree = p.degree();
    pl.order = m;
    pl.divides_b = divides(p, f.b());
    pl.divides_nodal = divides(p, nodal);
    pl.multiplicative = !(divides(p, f.a()) && pl.divides_b);
    pl.kodaira = pl.multiplicative ? "I_" + std::to_string(m) : "additive/unsupported";
    r.euler_sum += pl.degree * pl.order;
    r.all_multiplicative = r.all_multiplicative && pl.multiplicative;
    r.places.push_back(std::move(pl));
  }
  // chart s = 1/t: a^ = s^4 a(1/s), b^ = s^8 b(1/s), disc^ = s^24 disc(1/s)
  long ord_inf = 24 - f.discriminant().degree();
  if (ord_inf > 0) {
    Place pl;
    pl.at_infinity = true;
    pl.factor = RatPoly{0, 1};
    pl.order = ord_inf;
    pl.divides_b = f.b().degree() < 8;
    pl.divides_nodal = nodal.degree() < 8;
    pl.multiplicative = !(f.a().degree() < 4 && pl.divides_b);
    pl.kodaira = pl.multiplicative ? "I_" + std::to_string(ord_inf) : "additive/unsupported";
    r.euler_sum += ord_inf;
    r.all_multiplicative = r.all_multiplicative && pl.multiplicative;
    r.places.push_back(std::move(pl));
  }
  return r;
}

WeierstrassFibration two_isogeny_quotient(const WeierstrassFibration& f) {
  return WeierstrassFibration(Rational(-2) * f.a(), f.nodal_factor());
}

ShiodaTate shioda_tate(const std::vector<std::pair<long, long>>& fibers, long mw_rank, long torsion_order) {
  if (mw_rank > 0) throw Error("unsupported", "positive Mordell-Weil rank is not supported");
  if (mw_rank < 0 || torsion_order < 1) throw Error("bad_argument", "need mw_rank >= 0 and torsion >= 1");
  ShiodaTate s;
  s.picard_rank = 2 + mw_rank;
  Integer prod = 1;
  for (const auto& [n, mult] : fibers) {
    if (n < 1 || mult < 0) throw Error("bad_argument", "fiber types must be I_n with n >= 1");
    s.picard_rank += mult * (n - 1);
    for (long k = 0; k < mult; ++k) prod *= n;
  }
  s.ns_discriminant = Rational(prod, Integer(torsion_order) * torsion_order);
  s.ns_discriminant.canonicalize();
  return s;
}

std::vector<std::pair<long, long>> parse_fiber_list(const std::string& text) {
  std::vector<std::pair<long, long>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    std::string type = item.substr(0, colon);
    long mult = 1;
    try {
      if (colon != std::string::npos) mult = std::stol(item.substr(colon + 1));
      std::size_t start = type.rfind("I_", 0) == 0 ? 2 : (type.rfind("I", 0) == 0 ? 1 : std::string::npos);
      if (start == std::string::npos) throw std::invalid_argument(type);
      std::size_t used = 0;
      long n = std::stol(type.substr(start), &used);
      if (used != type.size() - start) throw std::invalid_argument(type);
      out.emplace_back(n, mult);
    } catch (const std::exception&) {
      throw Error("bad_argument", "cannot parse fiber \"" + item + "\" (expected e.g. I2:8)");
    }
  }
  return out;
}

TorsionTranslationReport torsion_section_translation_data(const WeierstrassFibration& f) {
  FiberReport fr = fiber_configuration(f);
  if (fr.weight_on_b(2) != 8 || fr.weight_on_nodal(1) != 8 || fr.weight(2) != 8 || fr.weight(1) != 8)
    throw Error("wrong_shape", "expected 8 fibers I_2 over b = 0 and 8 fibers I_1 over a^2 - 4b = 0");
  TorsionTranslationReport r;
  IntMatrix u{{-2, 1}, {1, 0}};
  Lattice sigma_f(u, {"sigma", "f"}, "<sigma,f>");
  r.ns = direct_sum({sigma_f, lattice_nikulin()}, "U+N");
  r.tau = IntVector(10, Integer(0));
  r.tau[0] = 1;
  r.tau[1] = 2;
  r.tau[9] = -1;
  r.tau_sq = r.ns.norm(r.tau);
  IntVector sigma(10, Integer(0)), fiber(10, Integer(0));
  sigma[0] = 1;
  fiber[1] = 1;
  r.tau_sigma = r.ns.pair(r.tau, sigma);
  r.tau_f = r.ns.pair(r.tau, fiber);
  for (std::size_t i = 0; i < 8; ++i) {
    IntVector node(10, Integer(0));
    if (i < 7) {
      node[2 + i] = 1;
    } else {
      for (std::size_t j = 0; j < 7; ++j) node[2 + j] = -1;
      node[9] = 2;
    }
    r.tau_nodes.push_back(r.ns.pair(r.tau, node));
  }
  r.det = r.ns.determinant();
  r.ns_matches_u_plus_n = fingerprint(r.ns) == fingerprint(direct_sum({lattice_U(), lattice_nikulin()}));
  return r;
}

I16Report i16_component_permutation(long n_components, long shift) {
  if (n_components < 16 || n_components % 2 != 0 || shift != n_components / 2)
    throw Error("bad_argument", "need an even number of components >= 16 and shift = n/2");
  const long n = n_components;
  I16Report r;
  for (long i = 0; i < n; ++i) r.permutation.push_back((i + shift) % n);
  for (long i = -2; i <= 4; ++i) r.first_chain.push_back(((i % n) + n) % n);
  for (long i = shift - 2; i <= shift + 4; ++i) r.second_chain.push_back(i % n);

  r.involution = true;
  for (long i = 0; i < n; ++i)
    if (r.permutation[r.permutation[i]] != i) r.involution = false;
  r.swaps_chains = true;
  for (std::size_t k = 0; k < 7; ++k)
    if (r.permutation[r.first_chain[k]] != r.second_chain[k]) r.swaps_chains = false;

  // classes: 0 = sigma (meets C_0), 1 = tau (meets C_shift), 2 + i = C_i
  const std::size_t m = static_cast<std::size_t>(n) + 2;
  IntMatrix g(m, m);
  g(0, 0) = g(1, 1) = -2;
  for (long i = 0; i < n; ++i) {
    std::size_t ci = 2 + i, cj = 2 + (i + 1) % n;
    g(ci, ci) = -2;
    g(ci, cj) = g(cj, ci) = 1;
  }
  g(0, 2) = g(2, 0) = 1;
  g(1, 2 + shift) = g(2 + shift, 1) = 1;

  auto sub = [&](const std::vector<std::size_t>& idx) {
    IntMatrix s(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = g(idx[i], idx[j]);
    return s;
  };
  std::vector<std::size_t> c1, c2;
  for (long i : r.first_chain) c1.push_back(2 + i);
  for (long i : r.second_chain) c2.push_back(2 + i);
  IntMatrix a7 = twist(lattice_A(7), -1).gram();
  r.chains_are_a7 = sub(c1) == a7 && sub(c2) == a7;

  std::vector<std::size_t> e1{0}, e2{1};
  e1.insert(e1.end(), c1.begin(), c1.end());
  e2.insert(e2.end(), c2.begin(), c2.end());
  r.first_e8 = Lattice(sub(e1), {}, "sigma+C(-2..4)");
  r.second_e8 = Lattice(sub(e2), {}, "tau+C(6..12)");
  bool orthogonal = true;
  for (std::size_t i : e1)
    for (std::size_t j : e2)
      if (g(i, j) != 0) orthogonal = false;
  auto is_e8 = [](const Lattice& l) {
    return l.rank() == 8 && l.determinant() == 1 && l.is_even() && l.is_negative_definite() &&
           enumerate_vectors_of_norm(l, -2).size() == 240;
  };
  r.e8_pair_ok = orthogonal && is_e8(r.first_e8) && is_e8(r.second_e8);
  return r;
}

namespace {

RatPoly random_poly(std::mt19937_64& rng, long degree, long lead_fixed) {
  std::uniform_int_distribution<long> coeff(-6, 6);
  std::vector<Rational> c(degree + 1);
  for (long i = 0; i < degree; ++i) c[i] = coeff(rng);
  long lead = lead_fixed;
  while (lead == 0) lead = coeff(rng);
  c[degree] = lead;
  return RatPoly(std::move(c));
}

}  // namespace

WeierstrassFibration random_generic_fibration(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RatPoly a = random_poly(rng, 4, 0);
    RatPoly b = random_poly(rng, 8, 0);
    RatPoly nodal = a * a - Rational(4) * b;
    if (nodal.degree() != 8 || !is_squarefree(b) || !is_squarefree(nodal) || gcd(b, nodal).degree() != 0) continue;
    return WeierstrassFibration(a, b);
  }
  throw Error("internal", "no generic sample found");
}

WeierstrassFibration random_i16_fibration(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-6, 6);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RatPoly a{coeff(rng), coeff(rng), coeff(rng), 0, 1};
    RatPoly two = RatPoly::constant(2);
    if (!is_squarefree(a - two) || !is_squarefree(a + two)) continue;
    return WeierstrassFibration(a, RatPoly{1});
  }
  throw Error("internal", "no generic sample found");
}

WeierstrassModuli weierstrass_moduli_count() {
  WeierstrassModuli m;
  m.coefficients = (4 + 1) + (8 + 1);
  m.scaling = 1;
  m.pgl2 = 3;
  m.value = m.coefficients - m.scaling - m.pgl2;
  return m;
}

}  // namespace k3lat
