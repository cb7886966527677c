#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

/// Univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<long> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, std::size_t k);

  /// "p/q" entries separated by commas, low degree first.
  static RatPoly parse(const std::string& text);

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  RatPoly monic() const;
  RatPoly derivative() const;
  Rational operator()(const Rational& x) const;
  /// s^k p(1/s); requires k >= degree.
  RatPoly reversed(std::size_t k) const;
  /// Largest e with t^e | p (the zero polynomial is rejected).
  std::size_t valuation() const;

  bool operator==(const RatPoly&) const = default;

  /// Comma-separated coefficient list, the inverse of parse.
  std::string to_coeff_string() const;
  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rational& s, const RatPoly& a);
RatPoly pow(const RatPoly& a, unsigned k);

/// a = q b + r with deg r < deg b; Error("division_by_zero") for b = 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& d, const RatPoly& a);
/// Monic gcd (zero if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
bool is_squarefree(const RatPoly& a);

/// Largest m with d^m | a, for nonconstant d.
long multiplicity(const RatPoly& d, const RatPoly& a);

struct Factorization {
  Rational unit;
  /// Irreducible factors over Q (primitive integral, positive leading
  /// coefficient) with multiplicities, sorted by degree then coefficients.
  std::vector<std::pair<RatPoly, long>> factors;
};

/// Squarefree decomposition followed by Zassenhaus factorization
/// (Berlekamp modulo a small prime, Hensel lifting, recombination).
Factorization factor(const RatPoly& p);

/// Yun's squarefree decomposition: p = unit * prod s_i^i, s_i squarefree,
/// pairwise coprime, monic. Entry i-1 holds s_i (possibly 1).
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

}  // namespace k3lat
