#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/fingerprint.hpp"
#include "k3lat/poly.hpp"

namespace k3lat {

/// y^2 = x (x^2 + a(t) x + b(t)) with deg a <= 4, deg b <= 8.
class WeierstrassFibration {
 public:
  /// Error("degree_bound") when deg a > 4 or deg b > 8;
  /// Error("degenerate") when the discriminant vanishes identically.
  WeierstrassFibration(RatPoly a, RatPoly b);

  const RatPoly& a() const { return a_; }
  const RatPoly& b() const { return b_; }
  /// b^2 (a^2 - 4b); the constant 16 of the usual normalization is dropped.
  const RatPoly& discriminant() const { return disc_; }
  /// a^2 - 4b.
  RatPoly nodal_factor() const { return a_ * a_ - Rational(4) * b_; }

 private:
  RatPoly a_, b_, disc_;
};

RatPoly discriminant(const WeierstrassFibration& f);

struct Place {
  bool at_infinity = false;
  RatPoly factor;  // irreducible over Q (t for the chart at infinity: s)
  long degree = 1;
  long order = 0;
  bool multiplicative = false;
  std::string kodaira;  // "I_m" or "additive/unsupported"
  bool divides_b = false;
  bool divides_nodal = false;  // divides a^2 - 4b

  long n() const { return multiplicative ? order : 0; }
};

struct FiberReport {
  std::vector<Place> places;
  long euler_sum = 0;  // sum of degree * order, including infinity
  bool all_multiplicative = true;
  std::string normalization = "discriminant taken as b^2(a^2-4b); constant units dropped";

  /// Sum of factor degrees over places of type I_n (optionally restricted
  /// to the b-locus or the (a^2-4b)-locus).
  long weight(long n) const;
  long weight_on_b(long n) const;
  long weight_on_nodal(long n) const;
  /// I_n at infinity, 0 if the fiber there is smooth or additive.
  long infinity_type() const;
  /// (n, count) over all places, counting a degree-k place as k fibers.
  std::vector<std::pair<long, long>> fiber_counts() const;
};

FiberReport fiber_configuration(const WeierstrassFibration& f);

/// (a, b) -> (-2a, a^2 - 4b).
WeierstrassFibration two_isogeny_quotient(const WeierstrassFibration& f);

struct ShiodaTate {
  long picard_rank = 0;
  Rational ns_discriminant;
};

/// fibers: (n, multiplicity) for fibers of type I_n. Errors: "unsupported"
/// for mw_rank > 0, "bad_argument" for n < 1 or torsion < 1.
ShiodaTate shioda_tate(const std::vector<std::pair<long, long>>& fibers, long mw_rank, long torsion_order);

/// Parses "I2:8,I1:8".
std::vector<std::pair<long, long>> parse_fiber_list(const std::string& text);

struct TorsionTranslationReport {
  IntVector tau;  // in the basis sigma, f, N1..N7, Nhat
  Lattice ns;     // U + N with sigma^2 = -2, sigma.f = 1, f^2 = 0
  Integer tau_sq;
  Integer tau_sigma;
  Integer tau_f;
  std::vector<Integer> tau_nodes;  // tau . N_i, i = 1..8
  Integer det;
  bool ns_matches_u_plus_n = false;
};

/// Error("wrong_shape") unless the fibration has I_2 weight 8 on the b-locus
/// and I_1 weight 8 on the (a^2-4b)-locus.
TorsionTranslationReport torsion_section_translation_data(const WeierstrassFibration& f);

struct I16Report {
  std::vector<long> permutation;  // C_n -> C_{n+shift}
  std::vector<long> first_chain;  // -2..4 (mod n)
  std::vector<long> second_chain; // 6..12
  bool involution = false;
  bool swaps_chains = false;
  bool chains_are_a7 = false;
  Lattice first_e8;   // sigma + chain
  Lattice second_e8;  // tau + chain
  bool e8_pair_ok = false;  // both even unimodular negative definite with 240 roots, mutually orthogonal
};

/// Error("bad_argument") unless n_components is even, >= 16 for the E8 check, and shift = n/2.
I16Report i16_component_permutation(long n_components = 16, long shift = 8);

/// a random (a, b) with deg a = 4, deg b = 8 exactly, b and a^2 - 4b squarefree and coprime.
WeierstrassFibration random_generic_fibration(std::uint64_t seed);
/// a = a0 + a1 t + a2 t^2 + t^4, b = 1 with a - 2 and a + 2 squarefree.
WeierstrassFibration random_i16_fibration(std::uint64_t seed);

/// 14 - 1 - 3 = 10: coefficients of (a, b), scaling, PGL(2).
struct WeierstrassModuli {
  long coefficients = 0;
  long scaling = 0;
  long pgl2 = 0;
  long value = 0;
};
WeierstrassModuli weierstrass_moduli_count();

}  // namespace k3lat
