#include <doctest.h>

#include "k3lat/elliptic.hpp"
#include "k3lat/error.hpp"
#include "k3lat/linalg.hpp"

using namespace k3lat;

TEST_CASE("generic two-torsion fibrations: 8 I_2 over b, 8 I_1 over a^2-4b") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    WeierstrassFibration f = random_generic_fibration(seed);
    CHECK(f.a().degree() == 4);
    CHECK(f.b().degree() == 8);
    FiberReport r = fiber_configuration(f);
    CHECK(r.weight_on_b(2) == 8);
    CHECK(r.weight_on_nodal(1) == 8);
    CHECK(r.euler_sum == 24);
    CHECK(r.infinity_type() == 0);
    CHECK(r.all_multiplicative);
    FiberReport q = fiber_configuration(two_isogeny_quotient(f));
    CHECK(q.weight_on_b(2) == 8);
    CHECK(q.weight_on_nodal(1) == 8);
    for (const auto& p : q.places) {
      if (p.n() == 2) CHECK(divides(p.factor, f.nodal_factor()));
      if (p.n() == 1) CHECK(divides(p.factor, f.b()));
    }
  }
}

TEST_CASE("the I_16 family and its quotient") {
  WeierstrassFibration f(RatPoly{1, 0, 0, 0, 1}, RatPoly{1});
  FiberReport r = fiber_configuration(f);
  CHECK(r.infinity_type() == 16);
  CHECK(r.weight(1) == 8);
  CHECK(r.fiber_counts() == std::vector<std::pair<long, long>>{{16, 1}, {1, 8}});
  WeierstrassFibration g = two_isogeny_quotient(f);
  FiberReport q = fiber_configuration(g);
  CHECK(q.infinity_type() == 8);
  CHECK(q.weight(2) == 8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    WeierstrassFibration h = random_i16_fibration(seed);
    CHECK(fiber_configuration(h).infinity_type() == 16);
    CHECK(fiber_configuration(h).weight(1) == 8);
    WeierstrassFibration hh = two_isogeny_quotient(two_isogeny_quotient(h));
    CHECK(hh.a() == Rational(4) * h.a());
    CHECK(hh.b() == Rational(16) * h.b());
  }
}

TEST_CASE("additive fibers are detected, not classified") {
  WeierstrassFibration f(RatPoly{0, 1}, RatPoly{0, 0, 1});
  FiberReport r = fiber_configuration(f);
  CHECK_FALSE(r.all_multiplicative);
  bool found = false;
  for (const auto& p : r.places)
    if (!p.at_infinity && p.factor == RatPoly{0, 1}) {
      found = true;
      CHECK(p.kodaira == "additive/unsupported");
      CHECK(p.n() == 0);
    }
  CHECK(found);
}

TEST_CASE("model errors") {
  CHECK_THROWS_AS(WeierstrassFibration(RatPoly{0, 0, 0, 0, 0, 1}, RatPoly{1}), Error);
  CHECK_THROWS_AS(WeierstrassFibration(RatPoly{1}, RatPoly{0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), Error);
  try {
    WeierstrassFibration(RatPoly{2}, RatPoly{1});
    FAIL("expected degenerate");
  } catch (const Error& e) {
    CHECK(e.code() == "degenerate");
  }
  CHECK_THROWS_AS(torsion_section_translation_data(WeierstrassFibration(RatPoly{1, 0, 0, 0, 1}, RatPoly{1})), Error);
}

TEST_CASE("Shioda-Tate") {
  ShiodaTate a = shioda_tate(parse_fiber_list("I2:8,I1:8"), 0, 2);
  CHECK(a.picard_rank == 10);
  CHECK(a.ns_discriminant == 64);
  ShiodaTate b = shioda_tate(parse_fiber_list("I16,I1:8"), 0, 2);
  CHECK(b.picard_rank == 17);
  CHECK(b.ns_discriminant == 4);
  CHECK(parse_fiber_list("I_8:1,I2:8") == std::vector<std::pair<long, long>>{{8, 1}, {2, 8}});
  CHECK_THROWS_AS(parse_fiber_list("II:3"), Error);
  CHECK_THROWS_AS(parse_fiber_list("I2:x"), Error);
  CHECK_THROWS_AS(shioda_tate({{2, 8}}, 1, 1), Error);
  CHECK_THROWS_AS(shioda_tate({{2, 8}}, 0, 0), Error);
}

TEST_CASE("translation by the torsion section") {
  TorsionTranslationReport t = torsion_section_translation_data(random_generic_fibration(3));
  CHECK(t.tau_sq == -2);
  CHECK(t.tau_sigma == 0);
  CHECK(t.tau_f == 1);
  for (const auto& x : t.tau_nodes) CHECK(x == 1);
  CHECK(t.det == -64);
  CHECK(t.ns_matches_u_plus_n);
}

TEST_CASE("I_16 component shift swaps two A_7 chains completing to orthogonal E8(-1)") {
  I16Report r = i16_component_permutation();
  CHECK(r.involution);
  CHECK(r.swaps_chains);
  CHECK(r.chains_are_a7);
  CHECK(r.e8_pair_ok);
  CHECK(r.first_chain == std::vector<long>{14, 15, 0, 1, 2, 3, 4});
  CHECK(r.second_chain == std::vector<long>{6, 7, 8, 9, 10, 11, 12});
  CHECK(r.first_e8.determinant() == 1);
  CHECK_THROWS_AS(i16_component_permutation(16, 4), Error);
}

TEST_CASE("Weierstrass parameter count") {
  WeierstrassModuli m = weierstrass_moduli_count();
  CHECK(m.coefficients == 14);
  CHECK(m.value == 10);
}
