#include <doctest.h>

#include "k3lat/error.hpp"
#include "k3lat/involution.hpp"
#include "k3lat/linalg.hpp"

using namespace k3lat;

TEST_CASE("quotient map identities hold") {
  AdjunctionReport r = verify_adjunction();
  CHECK(r.push_iota);
  CHECK(r.adjunction);
  CHECK(r.pull_scales_form);
  CHECK(r.push_pull);
  CHECK(r.pull_nodes);
  CHECK(r.y_full_unimodular);
  CHECK(r.ok());
}

TEST_CASE("push/pull adjunction on every basis pair, recomputed directly") {
  const CohomologyModel& m = cohomology_model();
  const Lattice& x = m.x_tilde;
  const Lattice& y = m.y_sub;
  for (std::size_t i = 0; i < 30; ++i) {
    IntVector a(30, Integer(0));
    a[i] = 1;
    for (std::size_t j = 0; j < 22; ++j) {
      IntVector b(22, Integer(0));
      b[j] = 1;
      CHECK(y.pair(pi_push(a), b) == x.pair(a, pi_pull(b)));
    }
  }
  for (std::size_t i = 0; i < 22; ++i)
    for (std::size_t j = 0; j < 22; ++j) {
      IntVector b(22, Integer(0)), c(22, Integer(0));
      b[i] = 1;
      c[j] = 1;
      CHECK(x.pair(pi_pull(b), pi_pull(c)) == 2 * y.pair(b, c));
    }
}

TEST_CASE("pull of the nodes and of a glue vector") {
  for (std::size_t i = 0; i < 7; ++i) {
    IntVector n(22, Integer(0));
    n[6 + i] = 1;
    IntVector img = pi_pull(n);
    for (std::size_t k = 0; k < 30; ++k) CHECK(img[k] == (k == 22 + i ? 2 : 0));
  }
  // (e1 + N1 + N2 + N3 + N8)/2 pulls back to e1 + E1 + E2 + E3 + E8
  RatVector w = u2_cubed_nikulin_glue_vectors()[0];
  w.resize(22, Rational(0));
  IntVector img = pi_pull_extended(w);
  for (std::size_t k = 0; k < 30; ++k) {
    bool one = k == 0 || k == 22 || k == 23 || k == 24 || k == 29;
    CHECK(img[k] == (one ? 1 : 0));
  }
  RatVector outside(22, Rational(0));
  outside[0] = Rational(1, 2);
  CHECK_THROWS_AS(pi_pull_extended(outside), Error);
}

TEST_CASE("swap involution on U^3+E8(-1)^2") {
  InvolutionModule m = k3_swap_involution();
  CHECK_NOTHROW(validate(m));
  STRInvariants s = str_invariants(m);
  CHECK(s == STRInvariants{6, 0, 8});
  CHECK(s.s + s.t + 2 * s.r == 22);
  InvariantSplit split = invariant_and_antiinvariant(m);
  CHECK(split.invariant_primitive);
  CHECK(split.anti_invariant_primitive);
  CHECK(fingerprint(split.invariant.lattice) ==
        fingerprint(direct_sum({lattice_U(), lattice_U(), lattice_U(), lattice_E8(-2)})));
  CHECK(fingerprint(split.anti_invariant.lattice) == fingerprint(lattice_E8(-2)));
}

TEST_CASE("(s,t,r) of simple involutions") {
  Lattice u = lattice_U();
  CHECK(str_invariants({u, IntMatrix::identity(2)}) == STRInvariants{2, 0, 0});
  CHECK(str_invariants({u, Integer(-1) * IntMatrix::identity(2)}) == STRInvariants{0, 2, 0});
  // e <-> f on U is a permutation module
  CHECK(str_invariants({u, IntMatrix{{0, 1}, {1, 0}}}) == STRInvariants{0, 0, 1});
  CHECK_THROWS_AS(validate({u, IntMatrix{{1, 1}, {0, 1}}}), Error);
  try {
    validate({u, IntMatrix{{-1, 0}, {0, 1}}});
    FAIL("expected not_isometry");
  } catch (const Error& e) {
    CHECK(e.code() == "not_isometry");
  }
}
