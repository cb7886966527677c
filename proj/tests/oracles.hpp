#pragma once

// Brute-force reference computations shared by the test suites. None of
// these call into the code under test beyond the Lattice value type.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace oracle {

using k3lat::Integer;
using k3lat::IntMatrix;
using k3lat::IntVector;
using k3lat::Rational;

inline Integer quad(const IntMatrix& g, const IntVector& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * g(i, j) * x[j];
  return s;
}

/// Every x in [-bound, bound]^n with x.G.x = norm, lexicographic.
inline std::vector<IntVector> box_vectors(const IntMatrix& g, long norm, long bound) {
  std::vector<IntVector> out;
  std::size_t n = g.rows();
  IntVector x(n, Integer(-bound));
  while (true) {
    if (quad(g, x) == norm) out.push_back(x);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (x[k] < bound) {
        ++x[k];
        for (std::size_t j = k + 1; j < n; ++j) x[j] = -bound;
        break;
      }
      if (k == 0) return out;
    }
  }
}

/// Laplace expansion, for cross-checking small determinants.
inline Integer laplace_det(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer term = m(0, j) * laplace_det(minor);
    s += (j % 2 == 0) ? term : Integer(-term);
  }
  return s;
}

/// Random symmetric matrix, strictly diagonally dominant with positive
/// diagonal (hence positive definite), even diagonal if requested.
inline IntMatrix random_dominant(std::mt19937_64& rng, std::size_t n, bool even) {
  std::uniform_int_distribution<long> off(-2, 2);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = off(rng);
  std::uniform_int_distribution<long> extra(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row += abs(g(i, j));
    Integer d = row + extra(rng);
    if (even && d % 2 != 0) d += 1;
    g(i, i) = d;
  }
  return g;
}

/// Coordinate box that contains every vector of norm <= norm for a
/// strictly diagonally dominant positive definite Gram matrix.
inline long dominant_bound(const IntMatrix& g, long norm) {
  Integer margin = -1;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Integer m = g(i, i);
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (j != i) m -= abs(g(i, j));
    if (margin < 0 || m < margin) margin = m;
  }
  long b = 0;
  while (margin * (b + 1) * (b + 1) <= norm) ++b;
  return b;
}

/// q histogram of A = G^-1 Z^n / Z^n computed as y^T G^-1 y mod 2 over
/// y in [0, |det|)^n, deduplicating classes by their reduced coordinates.
inline std::map<Rational, std::size_t> brute_q_histogram(const IntMatrix& g) {
  std::size_t n = g.rows();
  // adjugate via cofactors
  Integer det = laplace_det(g);
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer cof;
      if (n == 1) {
        cof = 1;
      } else {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, cc = 0; c < n; ++c)
            if (c != i) minor(rr, cc++) = g(r, c);
          ++rr;
        }
        cof = laplace_det(minor);
      }
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = Rational(cof, det);
      inv[i][j].canonicalize();
    }
  Integer d = abs(det);
  long dl = d.get_si();
  std::set<std::vector<Rational>> seen;
  std::map<Rational, std::size_t> hist;
  std::vector<long> y(n, 0);
  auto frac = [](Rational r) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rational(r - fl);
  };
  while (true) {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += inv[i][j] * y[j];
      x[i] = frac(s);
    }
    if (seen.insert(x).second) {
      Rational q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += x[i] * g(i, j) * x[j];
      Rational two = 2 * frac(q / 2);
      ++hist[two];
    }
    std::size_t k = 0;
    while (k < n && ++y[k] == dl) y[k++] = 0;
    if (k == n) break;
  }
  return hist;
}

inline Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace oracle
