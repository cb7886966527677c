#include <doctest.h>

#include "k3lat/enumerate.hpp"
#include "k3lat/error.hpp"
#include "k3lat/gluing.hpp"
#include "k3lat/linalg.hpp"

using namespace k3lat;

TEST_CASE("six half-vectors glue U(2)^3+N to an odd-signature unimodular lattice") {
  GlueData g = u2_cubed_nikulin_glue();
  Overlattice o = glue(g);
  CHECK(o.lattice.rank() == 14);
  CHECK(o.lattice.is_even());
  CHECK(o.lattice.determinant() == -1);
  CHECK(signature(o.lattice) == Signature{3, 11});
  CHECK(o.index == 64);
  CHECK(o.lattice.determinant() * o.index * o.index == g.base.determinant());
  for (const auto& v : g.generators) CHECK(contains(o, v));
  // basis and inclusion are inverse to each other
  CHECK(o.basis * o.inclusion == RatMatrix::identity(14));
  // the Gram of the new basis is B^T G B
  RatMatrix gram = o.basis.transpose() * to_rational(g.base.gram()) * o.basis;
  CHECK(to_integer(gram) == o.lattice.gram());
}

TEST_CASE("S8-conjugate glues give the same invariants") {
  Fingerprint ref = fingerprint(glue(u2_cubed_nikulin_glue()).lattice);
  for (const auto& sigma : nikulin_s8_generators()) {
    Overlattice o = glue(conjugate_nikulin_part(u2_cubed_nikulin_glue(), sigma));
    CHECK(fingerprint(o.lattice) == ref);
  }
}

TEST_CASE("N+N identity glue is Gamma16(-1)-like and not generated by roots") {
  Overlattice o = glue(nikulin_pair_glue());
  CHECK(o.lattice.rank() == 16);
  CHECK(o.lattice.is_even());
  CHECK(o.lattice.determinant() == 1);
  CHECK(o.lattice.is_negative_definite());
  CHECK(o.index == 64);
  auto roots = enumerate_vectors_of_norm(o.lattice, -2);
  CHECK(roots.size() == 480);
  CHECK(span_index(o.lattice, roots) == 2);
  CHECK(fingerprint(o.lattice) == fingerprint(lattice_gamma16(-1)));
}

TEST_CASE("N+N embeds in Gamma16(-1) with both factors primitive") {
  N2EmbeddingReport r = embed_N2_in_Gamma16();
  CHECK(r.isometric);
  CHECK(r.first_primitive);
  CHECK(r.second_primitive);
  CHECK(r.index == 64);
}

TEST_CASE("glue errors") {
  GlueData bad{lattice_U(2), {{Rational(1, 2), Rational(1, 2)}}};
  try {
    glue(bad);
    FAIL("expected not_isotropic");
  } catch (const Error& e) {
    CHECK(e.code() == "not_isotropic");
    CHECK(std::string(e.what()).find("q(") != std::string::npos);
  }
  GlueData not_dual{lattice_U(2), {{Rational(1, 3), 0}}};
  CHECK_THROWS_AS(glue(not_dual), Error);
  GlueData odd{lattice_rank1(1), {{Rational(1, 2)}}};
  CHECK_THROWS_AS(glue(odd), Error);
  GlueData ok{lattice_U(2), {{Rational(1, 2), 0}}};
  Overlattice o = glue(ok);
  CHECK(o.index == 2);
  CHECK(o.lattice.determinant() == -1);
  CHECK_THROWS_AS(overlattice_coords(o, {0, Rational(1, 2)}), Error);
}

TEST_CASE("glue determinant law det(M') |H|^2 = det(M)") {
  std::vector<GlueData> gs = {u2_cubed_nikulin_glue(), nikulin_pair_glue(),
                              GlueData{lattice_U(2), {{Rational(1, 2), 0}}},
                              GlueData{lattice_U(4), {{Rational(1, 2), 0}}},
                              GlueData{lattice_U(4), {{Rational(1, 4), 0}}}};
  for (const auto& g : gs) {
    Overlattice o = glue(g);
    CHECK(o.lattice.determinant() * o.index * o.index == g.base.determinant());
  }
}

TEST_CASE("primitivity") {
  Lattice u = direct_sum({lattice_U(), lattice_U()});
  IntMatrix prim{{1}, {0}, {0}, {0}};
  CHECK(is_primitive(u, prim).primitive);
  IntMatrix twice{{2}, {0}, {0}, {0}};
  PrimitivityReport r = is_primitive(u, twice);
  CHECK_FALSE(r.primitive);
  CHECK(r.cokernel_torsion == std::vector<Integer>{2});
  IntMatrix dep{{1, 2}, {0, 0}, {0, 0}, {0, 0}};
  CHECK_THROWS_AS(is_primitive(u, dep), Error);
}
