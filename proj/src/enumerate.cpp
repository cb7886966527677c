#include "k3lat/enumerate.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3lat {

namespace {

constexpr double kCoordinateLimit = 1e15;

// Q(x) = sum_i diag_i (x_i + sum_{j>i} mu_ij x_j)^2, the quadratic
// completion of a positive definite Gram matrix.
class Search {
 public:
  Search(const IntMatrix& positive_gram, Rational target) : n_(positive_gram.rows()), target_(std::move(target)) {
    RatMatrix q = to_rational(positive_gram);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        q(j, i) = q(i, j);
        q(i, j) /= q(i, i);
      }
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l) q(k, l) -= q(k, i) * q(i, l);
    }
    diag_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) diag_[i] = q(i, i);
    mu_ = std::move(q);
  }

  std::size_t dim() const { return n_; }
  const Rational& target() const { return target_; }

  Rational center(std::size_t level, const std::vector<long>& x) const {
    Rational c = 0;
    for (std::size_t j = level + 1; j < n_; ++j)
      if (x[j] != 0) c += mu_(level, j) * x[j];
    return c;
  }

  // integer x with diag_level * (x + c)^2 <= budget
  bool range(std::size_t level, const Rational& c, const Rational& budget, long& lo, long& hi) const {
    if (budget < 0) return false;
    Rational t = budget / diag_[level];
    double s = std::sqrt(std::max(0.0, t.get_d()));
    double cd = c.get_d();
    if (std::fabs(cd) + s > kCoordinateLimit)
      throw Error("overflow", "enumeration bound exceeds the coordinate range");
    auto ok = [&](long v) {
      Rational d = c + v;
      return d * d <= t;
    };
    lo = static_cast<long>(std::ceil(-cd - s));
    hi = static_cast<long>(std::floor(-cd + s));
    while (ok(lo - 1)) --lo;
    while (lo <= hi && !ok(lo)) ++lo;
    while (ok(hi + 1)) ++hi;
    while (hi >= lo && !ok(hi)) --hi;
    return lo <= hi;
  }

  Rational remaining(std::size_t level, const Rational& c, long v, const Rational& budget) const {
    Rational d = c + v;
    return budget - diag_[level] * d * d;
  }

  // Assign x[level] and below; x[level+1..] are fixed.
  void descend(std::size_t level, std::vector<long>& x, const Rational& budget, std::vector<IntVector>& out) const {
    Rational c = center(level, x);
    long lo, hi;
    if (!range(level, c, budget, lo, hi)) return;
    Rational d, rem;
    for (long v = lo; v <= hi; ++v) {
      x[level] = v;
      d = c + v;
      rem = budget - diag_[level] * d * d;
      if (level == 0) {
        if (rem == 0) out.emplace_back(x.begin(), x.end());
      } else {
        descend(level - 1, x, rem, out);
      }
    }
    x[level] = 0;
  }

 private:
  std::size_t n_;
  Rational target_;
  std::vector<Rational> diag_;
  RatMatrix mu_;
};

struct Prefix {
  std::vector<long> x;
  Rational budget;
};

Search make_search(const Lattice& l, const Integer& norm) {
  if (norm == 0) throw Error("bad_norm", "norm must be nonzero");
  Signature sig = signature(l);
  int sign = 0;
  if (sig.positive == 0) sign = -1;
  if (sig.negative == 0) sign = 1;
  if (l.rank() == 0) sign = norm < 0 ? -1 : 1;
  if (sign == 0) throw Error("not_definite", "vector enumeration needs a definite lattice");
  if ((norm < 0 && sign > 0) || (norm > 0 && sign < 0))
    throw Error("bad_norm", "norm sign does not match the definite lattice");
  IntMatrix g = l.gram();
  if (sign < 0) g *= Integer(-1);
  return Search(g, Rational(sign < 0 ? Integer(-norm) : norm));
}

void to_ambient_order(std::vector<IntVector>& out) {
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<IntVector> enumerate_vectors_of_norm_serial(const Lattice& l, const Integer& norm) {
  Search s = make_search(l, norm);
  std::vector<IntVector> out;
  if (s.dim() == 0) return out;
  std::vector<long> x(s.dim(), 0);
  s.descend(s.dim() - 1, x, s.target(), out);
  to_ambient_order(out);
  return out;
}

std::vector<IntVector> enumerate_vectors_of_norm_parallel(const Lattice& l, const Integer& norm) {
  Search s = make_search(l, norm);
  const std::size_t n = s.dim();
  if (n < 3) return enumerate_vectors_of_norm_serial(l, norm);

  // Fix the two outermost coordinates serially, then search the subtrees.
  std::vector<Prefix> prefixes;
  {
    std::vector<long> x(n, 0);
    long lo1, hi1, lo2, hi2;
    Rational c1 = s.center(n - 1, x);
    if (s.range(n - 1, c1, s.target(), lo1, hi1)) {
      for (long a = lo1; a <= hi1; ++a) {
        x[n - 1] = a;
        Rational b1 = s.remaining(n - 1, c1, a, s.target());
        Rational c2 = s.center(n - 2, x);
        if (!s.range(n - 2, c2, b1, lo2, hi2)) continue;
        for (long b = lo2; b <= hi2; ++b) {
          x[n - 2] = b;
          prefixes.push_back({x, s.remaining(n - 2, c2, b, b1)});
        }
        x[n - 2] = 0;
      }
    }
  }

  std::vector<std::vector<IntVector>> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(prefixes.size()); ++i) {
    std::vector<long> x = prefixes[i].x;
    s.descend(n - 3, x, prefixes[i].budget, parts[i]);
  }

  std::vector<IntVector> out;
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  to_ambient_order(out);
  return out;
}

std::vector<IntVector> enumerate_vectors_of_norm(const Lattice& l, const Integer& norm, Execution exec) {
  return exec == Execution::serial ? enumerate_vectors_of_norm_serial(l, norm)
                                   : enumerate_vectors_of_norm_parallel(l, norm);
}

}  // namespace k3lat
