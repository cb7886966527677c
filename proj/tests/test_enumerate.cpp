#include <doctest.h>

#include "k3lat/enumerate.hpp"
#include "k3lat/error.hpp"
#include "oracles.hpp"

using namespace k3lat;

TEST_CASE("A_n roots match a coordinate box search") {
  for (long n = 1; n <= 6; ++n) {
    Lattice a = lattice_A(n);
    auto found = enumerate_vectors_of_norm(a, 2);
    auto brute = oracle::box_vectors(a.gram(), 2, 1);
    CHECK(found == brute);
    CHECK(found.size() == static_cast<std::size_t>(n * (n + 1)));
  }
}

TEST_CASE("random definite forms match a coordinate box search") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    IntMatrix g = oracle::random_dominant(rng, n, trial % 2 == 0);
    long norm = 2 + trial % 9;
    long bound = oracle::dominant_bound(g, norm);
    auto brute = oracle::box_vectors(g, norm, bound);
    Lattice l(g);
    CHECK(enumerate_vectors_of_norm_serial(l, norm) == brute);
    CHECK(enumerate_vectors_of_norm_parallel(l, norm) == brute);
    CHECK(enumerate_vectors_of_norm(twist(l, -1), -norm) == brute);
  }
}

TEST_CASE("E8 roots: 240 in the root basis, equal to the half-integer model count") {
  // the even coordinate model: x in Z^8 or (Z+1/2)^8 with even coordinate sum
  std::size_t model = 0;
  for (int twice : {0, 1}) {
    std::vector<int> x(8);
    std::function<void(int, int, int)> rec = [&](int i, int norm4, int sum2) {
      if (norm4 > 8) return;
      if (i == 8) {
        if (norm4 == 8 && (sum2 / 2) % 2 == 0) ++model;
        return;
      }
      for (int v = -2; v <= 2; ++v) {
        if ((v % 2 != 0) != (twice == 1)) continue;
        rec(i + 1, norm4 + v * v, sum2 + v);
      }
    };
    rec(0, 0, 0);
  }
  auto roots = enumerate_vectors_of_norm(lattice_E8(-1), -2);
  CHECK(roots.size() == model);
  CHECK(roots.size() == 240);
  CHECK(enumerate_vectors_of_norm(lattice_E8(-2), -2).empty());
  CHECK(enumerate_vectors_of_norm(lattice_E8(-2), -4).size() == 240);
}

TEST_CASE("serial and parallel agree and the output is closed under negation") {
  for (const Lattice& l : {lattice_E8(-1), lattice_nikulin(), lattice_gamma16(-1), lattice_A(7, -1)}) {
    for (long norm : {-2L, -4L}) {
      auto s = enumerate_vectors_of_norm_serial(l, norm);
      auto p = enumerate_vectors_of_norm_parallel(l, norm);
      CHECK(s == p);
      CHECK(std::is_sorted(s.begin(), s.end()));
      std::set<IntVector> all(s.begin(), s.end());
      for (const auto& v : s) {
        IntVector neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        CHECK(all.count(neg) == 1);
        CHECK(l.norm(v) == norm);
      }
    }
  }
  CHECK(enumerate_vectors_of_norm(lattice_gamma16(-1), -2).size() == 480);
  CHECK(enumerate_vectors_of_norm(lattice_nikulin(), -2).size() == 16);
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(enumerate_vectors_of_norm(lattice_U(), 2), Error);
  CHECK_THROWS_AS(enumerate_vectors_of_norm(lattice_E8(-1), 2), Error);
  CHECK(enumerate_vectors_of_norm(lattice_E8(-1), -3).empty());
}
