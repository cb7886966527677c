#include "k3lat/matrix.hpp"

namespace k3lat {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error("not_integral", "matrix entry " + to_string(m(i, j)) + " is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

IntVector to_integer(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw Error("not_integral", "vector entry " + to_string(v[i]) + " is not integral");
    r[i] = v[i].get_num();
  }
  return r;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Rational reduce_mod(const Rational& r, const Rational& m) {
  // r - m * floor(r / m)
  Rational q = r / m;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational out = r - m * Rational(fl);
  out.canonicalize();
  return out;
}

}  // namespace k3lat
