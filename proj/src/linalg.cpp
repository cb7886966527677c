#include "k3lat/linalg.hpp"

#include <algorithm>
#include <utility>

namespace k3lat {

namespace {

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class T>
std::size_t rank_impl(Matrix<T> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      // fraction-free row reduction keeps Integer matrices exact
      T f = m(i, c), g = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) * g - m(r, j) * f;
    }
    ++r;
  }
  return r;
}

// Core Smith reduction. When transforms is false the U/V updates are skipped.
SmithForm smith_impl(const IntMatrix& a, bool transforms) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix A = a;
  IntMatrix U = transforms ? IntMatrix::identity(m) : IntMatrix();
  IntMatrix V = transforms ? IntMatrix::identity(n) : IntMatrix();

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(A(i, c), A(j, c));
    if (transforms)
      for (std::size_t c = 0; c < m; ++c) std::swap(U(i, c), U(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(A(r, i), A(r, j));
    if (transforms)
      for (std::size_t r = 0; r < n; ++r) std::swap(V(r, i), V(r, j));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) A(dst, c) += q * A(src, c);
    if (transforms)
      for (std::size_t c = 0; c < m; ++c) U(dst, c) += q * U(src, c);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < m; ++r) A(r, dst) += q * A(r, src);
    if (transforms)
      for (std::size_t r = 0; r < n; ++r) V(r, dst) += q * V(r, src);
  };

  const std::size_t k = std::min(m, n);
  std::size_t t = 0;
  for (; t < k; ++t) {
    bool exhausted = false;
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (A(i, j) == 0) continue;
          if (pi == m || abs(A(i, j)) < abs(A(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        exhausted = true;
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        add_row(i, t, -tdiv(A(i, t), A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        add_col(j, t, -tdiv(A(t, j), A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (exhausted) break;
    if (A(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) A(t, c) = -A(t, c);
      if (transforms)
        for (std::size_t c = 0; c < m; ++c) U(t, c) = -U(t, c);
    }
  }

  SmithForm out;
  out.diagonal.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.diagonal[i] = A(i, i);
  out.left = std::move(U);
  out.right = std::move(V);
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& a) {
  if (!a.square()) throw Error("shape", "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix M = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return rank_impl(m); }
std::size_t rank(const RatMatrix& m) { return rank_impl(m); }

RatMatrix inverse(const RatMatrix& a) {
  if (!a.square()) throw Error("shape", "inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix M = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M(p, c) == 0) ++p;
    if (p == n) throw Error("singular", "matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(M(c, j), M(p, j));
      std::swap(inv(c, j), inv(p, j));
    }
    Rational piv = M(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      M(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M(i, c) == 0) continue;
      Rational f = M(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        M(i, j) -= f * M(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix inverse(const IntMatrix& a) { return inverse(to_rational(a)); }

RatVector solve(const RatMatrix& a, const RatVector& b) { return inverse(a) * b; }

SmithForm smith_normal_form(const IntMatrix& a) { return smith_impl(a, true); }

std::vector<Integer> smith_invariants(const IntMatrix& a) {
  if (a.rows() > a.cols()) {
    // row operations preserve invariant factors; HNF shrinks tall inputs first
    IntMatrix h = hermite_normal_form(a);
    auto inv = smith_impl(h, false).diagonal;
    inv.resize(a.cols(), Integer(0));
    return inv;
  }
  return smith_impl(a, false).diagonal;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix A = a;
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool found = false;
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (A(i, c) != 0 && (p == m || abs(A(i, c)) < abs(A(p, c)))) p = i;
      if (p == m) break;
      found = true;
      if (p != r)
        for (std::size_t j = 0; j < n; ++j) std::swap(A(r, j), A(p, j));
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (A(i, c) == 0) continue;
        Integer q = tdiv(A(i, c), A(r, c));
        for (std::size_t j = c; j < n; ++j) A(i, j) -= q * A(r, j);
        if (A(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (!found) continue;
    if (A(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) A(r, j) = -A(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = fdiv(A(i, c), A(r, c));
      if (q == 0) continue;
      for (std::size_t j = c; j < n; ++j) A(i, j) -= q * A(r, j);
    }
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = A(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  SmithForm s = smith_normal_form(a);
  std::size_t r = 0;
  while (r < s.diagonal.size() && s.diagonal[r] != 0) ++r;
  IntMatrix k(n, n - r);
  for (std::size_t c = r; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) k(i, c - r) = s.right(i, c);
  return k;
}

Integer common_denominator(const RatMatrix& m) {
  Integer d = 1;
  for (const auto& v : m.data()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

Integer common_denominator(const RatVector& v) {
  Integer d = 1;
  for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

}  // namespace k3lat
