#include <doctest.h>

#include "k3lat/error.hpp"
#include "k3lat/linalg.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_diagonal_chain(const SmithForm& s, const IntMatrix& a) {
  IntMatrix d = s.left * a * s.right;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    if (d(i, i) != s.diagonal[i] || s.diagonal[i] < 0) return false;
    if (i + 1 < s.diagonal.size() && s.diagonal[i] != 0 && s.diagonal[i + 1] % s.diagonal[i] != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with Laplace expansion") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = random_matrix(rng, n, n, 9);
    CHECK(determinant(m) == oracle::laplace_det(m));
  }
}

TEST_CASE("inverse and solve are exact") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4, 5);
    if (determinant(m) == 0) continue;
    RatMatrix inv = inverse(m);
    CHECK(to_rational(m) * inv == RatMatrix::identity(4));
    RatVector b{1, 2, 3, 4};
    RatVector x = solve(to_rational(m), b);
    CHECK(to_rational(m) * x == b);
  }
  CHECK_THROWS_AS(inverse(IntMatrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("Smith normal form: transforms, divisibility, |det| = product") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMatrix a = random_matrix(rng, r, c, 6);
    SmithForm s = smith_normal_form(a);
    CHECK(is_diagonal_chain(s, a));
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    std::vector<Integer> inv = smith_invariants(a);
    CHECK(inv == s.diagonal);
    if (r == c) {
      Integer prod = 1;
      for (const auto& d : s.diagonal) prod *= d;
      CHECK(prod == abs(determinant(a)));
    }
  }
}

TEST_CASE("Hermite normal form spans the same row lattice") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 5, 3, 7);
    IntMatrix h = hermite_normal_form(a);
    CHECK(h.rows() == rank(a));
    // same lattice: stacking does not change the invariants
    IntMatrix stacked(a.rows() + h.rows(), 3);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < 3; ++j) stacked(i, j) = a(i, j);
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < 3; ++j) stacked(a.rows() + i, j) = h(i, j);
    CHECK(smith_invariants(stacked) == smith_invariants(a));
    CHECK(smith_invariants(h) == smith_invariants(a));
    std::size_t col = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      while (h(i, col) == 0) ++col;
      CHECK(h(i, col) > 0);
      for (std::size_t k = 0; k < i; ++k) CHECK((h(k, col) >= 0 && h(k, col) < h(i, col)));
      ++col;
    }
  }
}

TEST_CASE("integer kernel is saturated") {
  IntMatrix a{{2, 4, 6}};
  IntMatrix k = integer_kernel(a);
  REQUIRE(k.cols() == 2);
  IntMatrix zero = a * k;
  for (std::size_t j = 0; j < zero.cols(); ++j) CHECK(zero(0, j) == 0);
  for (const auto& d : smith_invariants(k)) CHECK(d == 1);
}
