#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "k3lat/enumerate.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/// Residues (c_1 mod d_1, ..., c_k mod d_k) against the invariant factors.
struct DiscElement {
  std::vector<long> coeffs;

  auto operator<=>(const DiscElement&) const = default;
};

/// A_M = M*/M with q: A_M -> Q/2Z and b: A_M x A_M -> Q/Z.
/// Vectors in M (x) Q are written in the basis of M.
class DiscriminantForm {
 public:
  static constexpr std::size_t kMaxElements = std::size_t(1) << 20;

  /// Throws Error("not_even") for odd lattices.
  explicit DiscriminantForm(Lattice l);

  const Lattice& lattice() const { return lattice_; }
  /// d_1 | d_2 | ... | d_k, all > 1.
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  /// Dual-lattice lifts of the cyclic generators.
  const std::vector<RatVector>& generators() const { return gens_; }
  Integer order() const;
  /// order() as a size_t; throws Error("too_large") above kMaxElements.
  std::size_t size() const;
  bool two_elementary() const;

  bool is_dual(const RatVector& x) const;
  /// Class of a dual vector; Error("not_dual") otherwise.
  DiscElement reduce(const RatVector& x) const;
  RatVector lift(const DiscElement& e) const;

  DiscElement zero() const;
  DiscElement add(const DiscElement& x, const DiscElement& y) const;
  DiscElement scale(const DiscElement& x, long n) const;
  bool is_zero(const DiscElement& x) const;

  /// Values reduced into [0,2) and [0,1).
  Rational q(const DiscElement& x) const;
  Rational b(const DiscElement& x, const DiscElement& y) const;

  /// Mixed-radix index; elements() lists them in this (lexicographic) order.
  std::size_t index_of(const DiscElement& x) const;
  DiscElement element_at(std::size_t index) const;
  std::vector<DiscElement> elements() const;

 private:
  Lattice lattice_;
  std::vector<Integer> factors_;
  std::vector<long> moduli_;
  std::vector<RatVector> gens_;
  IntMatrix reduce_rows_;        // rows of U for the nontrivial factors
  std::vector<Rational> pairing_;  // k x k generator pairings, row-major
};

std::string to_string(const DiscElement& e);

/// q-value (as "0", "1/2", ...) -> number of elements.
using QHistogram = std::map<std::string, std::size_t>;

QHistogram q_histogram(const DiscriminantForm& f, Execution exec = Execution::parallel);
QHistogram q_histogram_serial(const DiscriminantForm& f);
QHistogram q_histogram_parallel(const DiscriminantForm& f);
/// q -> -q elementwise.
QHistogram negated(const QHistogram& h);

struct QKReport {
  std::size_t elements = 0;
  std::size_t q_zero = 0;
  std::size_t q_one = 0;
  bool two_elementary_rank6 = false;
  bool matches_hyperbolic = false;
};

/// Checks q on A_{U(2)^3} against x1x2 + x3x4 + x5x6 in the basis e_i/2, f_i/2.
QKReport qK_on_U2_cubed();

/// Isotropic subgroups of the given order; each is returned as a sorted
/// element list. Accepts 2-elementary forms or |A| <= 2^12; throws
/// Error("too_large") outside that range or when more than 2^16 distinct
/// intermediate subgroups would have to be tracked.
std::vector<std::vector<DiscElement>> enumerate_isotropic_subgroups(const DiscriminantForm& f, std::size_t order);
/// A minimal generating set picked greedily in element order.
std::vector<DiscElement> subgroup_generators(const DiscriminantForm& f, const std::vector<DiscElement>& subgroup);
/// Closure of a generator list under addition, sorted.
std::vector<DiscElement> generated_subgroup(const DiscriminantForm& f, const std::vector<DiscElement>& gens);

/// Action on A of an isometry g of the lattice (columns are images of basis
/// vectors), as a permutation of element indices. Error("not_isometry") if
/// g does not preserve the Gram matrix.
std::vector<std::size_t> induced_permutation(const DiscriminantForm& f, const IntMatrix& g);

/// Orbit partition of A under the group generated by the permutations.
/// Error("not_q_preserving") if some generator changes a q-value. Orbits
/// are sorted internally and ordered by smallest element.
std::vector<std::vector<DiscElement>> orbits_under_generators(const DiscriminantForm& f,
                                                              const std::vector<std::vector<std::size_t>>& gens);
std::vector<std::vector<DiscElement>> orbits_under_isometries(const DiscriminantForm& f,
                                                              const std::vector<IntMatrix>& gens);

/// Simple reflections of E8 (any twist) in the standard basis.
std::vector<IntMatrix> e8_simple_reflections();
/// Adjacent transpositions (N_i N_{i+1}), i = 1..7, acting on the Nikulin
/// basis {N1..N7, Nhat}.
std::vector<IntMatrix> nikulin_s8_generators();

}  // namespace k3lat
