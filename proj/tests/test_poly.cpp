#include <doctest.h>

#include <map>
#include <random>

#include "k3lat/error.hpp"
#include "k3lat/poly.hpp"

using namespace k3lat;

namespace {

struct Frozen {
  const char* name;
  const char* poly;
  const char* unit;
  std::vector<std::pair<const char*, long>> factors;
};

// generated with sympy factor_list over QQ
const std::vector<Frozen> kFrozen = {
    {"t8+2t4-3", "-3,0,0,0,2,0,0,0,1", "1", {{"-1,1", 1}, {"1,1", 1}, {"1,0,1", 1}, {"3,0,0,0,1", 1}}},
    {"t16-1", "-1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1", "1", {{"-1,1", 1}, {"1,1", 1}, {"1,0,1", 1}, {"1,0,0,0,1", 1}, {"1,0,0,0,0,0,0,0,1", 1}}},
    {"t4+1", "1,0,0,0,1", "1", {{"1,0,0,0,1", 1}}},
    {"t4-10t2+1", "1,0,-10,0,1", "1", {{"1,0,-10,0,1", 1}}},
    {"cyclotomic product", "-3,-8,-15,-18,-19,-15,-10,-3,0,1", "1", {{"-3,1", 1}, {"1,1,1", 2}, {"1,1,1,1,1", 1}}},
    {"rational", "-1/2,0,1/2", "1/2", {{"-1,1", 1}, {"1,1", 1}}},
    {"repeated", "-2,-11,-18,-24,-42,-6,-38,16,-12,9", "1", {{"-2,1", 1}, {"1,3", 2}, {"1,0,1", 3}}},
    {"generic discriminant", "125,1250,1175,-1300,-935,420,-2681,-2282,2999,314,-2710,1850,1614,-2452,320,2956,-627,-628,1616,384,-924,704,480,-512,320", "1", {{"-5,0,6,-1,-2,5,-1,-4,4", 2}, {"5,50,59,66,73,52,36,8,20", 1}}},
    {"generic quotient discriminant", "2000,40000,244800,477200,577040,682320,608784,203088,-232880,-442576,-713648,-922576,-838208,-738320,-764400,-701120,-468288,-455040,-361600,-221440,-141824,-100608,-69376,5120,-25600", "-16", {{"-5,0,6,-1,-2,5,-1,-4,4", 1}, {"5,50,59,66,73,52,36,8,20", 2}}},
    {"i16 discriminant", "-3,-8,18,-8,3,-8,2,0,1", "1", {{"-1,-4,1,0,1", 1}, {"3,-4,1,0,1", 1}}},
    {"i16 quotient discriminant", "144,768,-704,-3840,6944,-4608,4608,-5888,3248,-1536,1792,-768,160,-256,64,0,16", "16", {{"-1,-4,1,0,1", 2}, {"3,-4,1,0,1", 2}}},
    {"high degree", "35,-35,-15,1,14,-29,-1,10,14,-2,-4,-5,0,0,2", "1", {{"1,-1,1", 1}, {"-5,0,0,2", 1}, {"-1,0,1,1", 1}, {"7,0,-3,0,0,0,1", 1}}},
};

RatPoly expand(const Factorization& f) {
  RatPoly p = RatPoly::constant(f.unit);
  for (const auto& [q, m] : f.factors) p = p * pow(q, static_cast<unsigned>(m));
  return p;
}

RatPoly random_poly(std::mt19937_64& rng, long deg) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<Rational> c(deg + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return RatPoly(c);
}

}  // namespace

TEST_CASE("factorizations match frozen sympy results") {
  for (const auto& fz : kFrozen) {
    CAPTURE(fz.name);
    RatPoly p = RatPoly::parse(fz.poly);
    Factorization f = factor(p);
    CHECK(f.unit == Rational(fz.unit));
    std::map<std::string, long> got, want;
    for (const auto& [q, m] : f.factors) got[q.to_coeff_string()] = m;
    for (const auto& [q, m] : fz.factors) want[q] = m;
    CHECK(got == want);
    CHECK(expand(f) == p);
  }
}

TEST_CASE("factor of random products multiplies back and factors are irreducible-looking") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    RatPoly p = random_poly(rng, 1 + trial % 4) * random_poly(rng, 1 + trial % 3) * random_poly(rng, 2);
    if (p.is_zero()) continue;
    Factorization f = factor(p);
    CHECK(expand(f) == p);
    for (const auto& [q, m] : f.factors) {
      CHECK(q.degree() >= 1);
      CHECK(q.lead() > 0);
      CHECK(is_squarefree(q));
      CHECK(m >= 1);
    }
  }
}

TEST_CASE("division, gcd and squarefree decomposition") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    RatPoly a = random_poly(rng, 6), b = random_poly(rng, 3);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    RatPoly c = random_poly(rng, 2);
    RatPoly g = gcd(a * c, b * c);
    CHECK(divides(c.monic(), g));
    CHECK(g.lead() == 1);
  }
  RatPoly p = pow(RatPoly{1, 1}, 3) * pow(RatPoly{-2, 0, 1}, 2) * RatPoly{5, 1};
  auto sq = squarefree_decomposition(p);
  REQUIRE(sq.size() == 3);
  CHECK(sq[0] == RatPoly{5, 1});
  CHECK(sq[1] == RatPoly{-2, 0, 1});
  CHECK(sq[2] == RatPoly{1, 1});
  CHECK(multiplicity(RatPoly{1, 1}, p) == 3);
  CHECK_FALSE(is_squarefree(p));
  CHECK_THROWS_AS(divmod(p, RatPoly{}), Error);
}

TEST_CASE("parsing and printing") {
  RatPoly p = RatPoly::parse("1/2, 0, -3");
  CHECK(p.coeff(0) == Rational(1, 2));
  CHECK(p.degree() == 2);
  CHECK(RatPoly::parse(p.to_coeff_string()) == p);
  CHECK(RatPoly{1, 0, 0, 0, 1}.to_string() == "t^4 + 1");
  CHECK(p.reversed(2) == RatPoly::parse("-3,0,1/2"));
  CHECK(RatPoly{0, 0, 3}.valuation() == 2);
  CHECK_THROWS_AS(RatPoly::parse("1,x"), Error);
  CHECK_THROWS_AS(RatPoly::parse("1/0"), Error);
}
