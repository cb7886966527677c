#include <doctest.h>

#include "k3lat/error.hpp"
#include "k3lat/gluing.hpp"
#include "k3lat/linalg.hpp"
#include "oracles.hpp"

using namespace k3lat;

TEST_CASE("standard lattices") {
  CHECK(lattice_U().determinant() == -1);
  CHECK(signature(lattice_U()) == Signature{1, 1});
  CHECK(lattice_E8().determinant() == 1);
  CHECK(signature(lattice_E8()) == Signature{8, 0});
  CHECK(signature(lattice_E8(-1)) == Signature{0, 8});
  CHECK(lattice_E8(-2).determinant() == 256);
  for (long n = 1; n <= 10; ++n) CHECK(lattice_A(n).determinant() == n + 1);
  Lattice n = lattice_nikulin();
  CHECK(n.determinant() == 64);
  CHECK(n.is_even());
  CHECK(n.is_negative_definite());
  Lattice g = lattice_gamma16();
  CHECK(g.is_unimodular());
  CHECK(g.is_even());
  CHECK(g.is_positive_definite());
  CHECK(lattice_rank1(-4).determinant() == -4);
}

TEST_CASE("determinant scales by n^rank under twist") {
  for (long tw : {-3L, -2L, -1L, 2L, 5L}) {
    for (const Lattice& l : {lattice_U(), lattice_E8(), lattice_A(3), lattice_nikulin(), lattice_rank1(6)}) {
      Integer expect = l.determinant();
      for (std::size_t i = 0; i < l.rank(); ++i) expect *= tw;
      CHECK(twist(l, tw).determinant() == expect);
      Signature s = signature(l), t = signature(twist(l, tw));
      if (tw > 0) CHECK(s == t);
      else CHECK((t.positive == s.negative && t.negative == s.positive));
    }
  }
}

TEST_CASE("signature matches Sylvester's criterion on random definite forms") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix g = oracle::random_dominant(rng, 2 + trial % 5, false);
    Lattice l(g);
    CHECK(signature(l) == Signature{g.rows(), 0});
    CHECK(signature(twist(l, -1)) == Signature{0, g.rows()});
    CHECK(l.determinant() == oracle::laplace_det(g));
  }
}

TEST_CASE("direct sum is block diagonal and labels are disambiguated") {
  Lattice s = direct_sum({lattice_U(), lattice_U()});
  CHECK(s.rank() == 4);
  CHECK(s.determinant() == 1);
  CHECK(signature(s) == Signature{2, 2});
  std::set<std::string> labels(s.labels().begin(), s.labels().end());
  CHECK(labels.size() == 4);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Lattice(IntMatrix{{1, 2}, {3, 4}}), Error);
  CHECK_THROWS_AS(Lattice(IntMatrix{{1, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(twist(lattice_U(), 0), Error);
  try {
    Lattice(IntMatrix{{0, 0}, {0, 0}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "degenerate");
  }
}

TEST_CASE("Gamma16 membership and basis") {
  RatVector h(16, Rational(1, 2));
  CHECK(gamma16_contains(h));
  RatVector odd(16, Rational(0));
  odd[0] = 1;
  CHECK_FALSE(gamma16_contains(odd));
  odd[1] = 1;
  CHECK(gamma16_contains(odd));
  RatVector mixed(16, Rational(0));
  mixed[0] = Rational(1, 2);
  CHECK_FALSE(gamma16_contains(mixed));
  RatMatrix b = gamma16_basis_vectors();
  for (std::size_t k = 0; k < 16; ++k) CHECK(gamma16_contains(b.col(k)));
  IntVector c = gamma16_coords(h);
  CHECK(b * to_rational(c) == h);
  CHECK_THROWS_AS(gamma16_coords(mixed), Error);
}

TEST_CASE("Nikulin node coordinates") {
  RatVector all(8, Rational(1, 2));
  IntVector nhat = nikulin_coords(all);
  IntVector expect(8, Integer(0));
  expect[7] = 1;
  CHECK(nhat == expect);
  RatVector n8(8, Rational(0));
  n8[7] = 1;
  IntVector c = nikulin_coords(n8);
  CHECK(lattice_nikulin().norm(c) == -2);
  CHECK(nikulin_node_coeffs(c) == n8);
  RatVector half(8, Rational(0));
  half[0] = Rational(1, 2);
  CHECK_THROWS_AS(nikulin_coords(half), Error);
}

TEST_CASE("orthogonal complements are primitive") {
  Lattice k3 = direct_sum({lattice_U(), lattice_U(), lattice_U(), lattice_E8(-1), lattice_E8(-1)});
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<IntVector> s;
    for (int k = 0; k < 2; ++k) {
      IntVector v(22);
      for (auto& x : v) x = d(rng);
      s.push_back(v);
    }
    Sublattice c = orthogonal_complement(k3, s);
    CHECK(c.embedding.cols() == 20);
    CHECK(is_primitive(k3, c.embedding).primitive);
    for (std::size_t j = 0; j < c.embedding.cols(); ++j)
      for (const auto& v : s) CHECK(k3.pair(v, c.embedding.col(j)) == 0);
  }
}
