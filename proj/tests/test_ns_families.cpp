#include <doctest.h>

#include "k3lat/enumerate.hpp"
#include "k3lat/error.hpp"
#include "k3lat/ns_families.hpp"
#include "oracles.hpp"

using namespace k3lat;

TEST_CASE("one family for 2d = 2 mod 4, two for 2d = 0 mod 4") {
  for (long two_d = 2; two_d <= 40; two_d += 2) {
    auto fams = classify_ns(two_d);
    REQUIRE(fams.size() == (two_d % 4 == 2 ? 1u : 2u));
    const Lattice& plain = fams[0].lattice;
    CHECK(plain.rank() == 9);
    CHECK(plain.determinant() == Integer(two_d) * 256);
    CHECK(signature(plain) == Signature{1, 8});
    if (fams.size() == 2) {
      const NSFamily& t = fams[1];
      CHECK(t.variant == Variant::tilde);
      CHECK(t.lattice.determinant() * 4 == plain.determinant());
      CHECK(t.det_ratio == 4);
      CHECK(t.lattice.is_even());
      CHECK(t.e8_primitive);
      REQUIRE(t.glue_v);
      CHECK(lattice_E8(-2).norm(*t.glue_v) == (two_d % 8 == 4 ? -4 : -8));
    }
  }
  CHECK_THROWS_AS(classify_ns(3), Error);
  CHECK_THROWS_AS(classify_ns(0), Error);
}

TEST_CASE("tilde glue validity: (L+v)/2 has even norm exactly when the congruence holds") {
  Lattice e = lattice_E8(-2);
  for (long norm : {-4L, -6L, -8L}) {
    auto vs = enumerate_vectors_of_norm(e, norm);
    for (long two_d = 2; two_d <= 24; two_d += 2)
      for (std::size_t k = 0; k < vs.size(); k += 7) {
        // ((L+v)/2)^2 = (2d + v^2)/4 must be an even integer
        long num = two_d + norm;
        bool even_norm = num % 8 == 0;
        CHECK(tilde_glue_isotropic(two_d, vs[k]) == even_norm);
        CHECK(tilde_congruence(two_d, vs[k]) == even_norm);
      }
  }
}

TEST_CASE("tilde lattice does not depend on the choice of v") {
  CHECK(tilde_choice_independent(4, 6));
  CHECK(tilde_choice_independent(8, 6));
  CHECK(tilde_choice_independent(12, 4));
  auto c = tilde_candidates(4);
  CHECK(c.size() == 240);
  CHECK(std::is_sorted(c.begin(), c.end()));
}

TEST_CASE("determinant square class obstruction") {
  for (long rank_t = 1; rank_t <= 13; ++rank_t) {
    SquareClassReport r = det_square_class_obstruction(rank_t);
    CHECK(r.d == 14 - rank_t);
    CHECK(r.ratio_numerator == (Integer(1) << static_cast<unsigned long>(16 - rank_t)) * r.ratio_denominator);
    CHECK(r.is_square == (rank_t % 2 == 0));
  }
  CHECK_THROWS_AS(det_square_class_obstruction(0), Error);
  CHECK_THROWS_AS(det_square_class_obstruction(14), Error);
}

TEST_CASE("eigenspace dimensions add up to h^0(L) = d + 2 and fixed points to 8") {
  for (long two_d = 2; two_d <= 60; two_d += 2) {
    std::vector<Variant> vs{Variant::plain};
    if (two_d % 4 == 0) vs.push_back(Variant::tilde);
    for (Variant v : vs) {
      EigenspaceDimensions e = eigenspace_dimensions(two_d, v);
      CHECK(e.h_plus + e.h_minus == two_d / 2 + 2);
      CHECK(e.fixed_plus + e.fixed_minus == 8);
    }
  }
  EigenspaceDimensions e = eigenspace_dimensions(6, Variant::plain);
  CHECK((e.h_plus == 3 && e.h_minus == 2 && e.fixed_plus == 6 && e.fixed_minus == 2));
  CHECK_THROWS_AS(eigenspace_dimensions(6, Variant::tilde), Error);
}

TEST_CASE("invariant and anti-invariant monomials partition all monomials") {
  for (long n = 1; n <= 6; ++n)
    for (long mask = 0; mask < (1L << n); ++mask) {
      std::vector<long> neg;
      for (long i = 0; i < n; ++i)
        if (mask >> i & 1) neg.push_back(i);
      for (long d = 0; d <= 6; ++d)
        CHECK(oracle::binomial(n + d - 1, d) ==
              count_invariant_monomials(n, neg, d, Parity::invariant) +
                  count_invariant_monomials(n, neg, d, Parity::anti_invariant));
    }
  CHECK(count_invariant_monomials(3, {0}, 6, Parity::invariant) == 16);
  CHECK(count_invariant_monomials(3, {}, 2, Parity::invariant, {{2, 0, 0}}) == 5);
}

TEST_CASE("all six moduli counts equal 11") {
  const std::map<std::string, std::string> formulas = {
      {"M2", "16-(1+4)=11"},        {"M6", "(9-1)+(19-1)-3-(13-1)=11"}, {"M4", "19-8=11"},
      {"M4tilde", "(6-1)+(15-1)-(9-1)=11"}, {"M8", "20+(9-1)-(18-1)=11"}, {"M8tilde", "30-(4+16-1)=11"}};
  for (const auto& ex : moduli_examples()) {
    ModuliCount m = moduli_dimension(ex);
    CHECK(m.value == 11);
    CHECK(m.formula == formulas.at(ex));
  }
  CHECK_THROWS_AS(moduli_dimension("M12"), Error);
}

TEST_CASE("transcendental lattice of U+N in the K3 lattice is U^2+N") {
  StockEmbedding s = elliptic_ns_embedding();
  CHECK(s.ambient.rank() == 22);
  CHECK(s.ambient.determinant() == -1);
  CHECK(signature(s.ambient) == Signature{3, 19});
  TranscendentalReport t = transcendental_fingerprint(s.ambient, s.ns);
  CHECK(t.primitive);
  CHECK(t.fingerprint == fingerprint(direct_sum({lattice_U(), lattice_U(), lattice_nikulin()})));
  CHECK(t.fingerprint.signature == Signature{2, 10});
}

TEST_CASE("Morrison-Nikulin lattices <2n>+E8(-1)^2 and <-2n>+U^2") {
  for (long n = 1; n <= 4; ++n) {
    MorrisonNikulinReport r = morrison_nikulin_lattices(n);
    CHECK(r.ok());
    CHECK(r.ns == fingerprint(direct_sum({lattice_rank1(2 * n), lattice_E8(-1), lattice_E8(-1)})));
    CHECK(r.t == fingerprint(direct_sum({lattice_rank1(-2 * n), lattice_U(), lattice_U()})));
    REQUIRE(r.ns.q_histogram);
    CHECK(negated(*r.ns.q_histogram) == *r.t.q_histogram);
  }
}
