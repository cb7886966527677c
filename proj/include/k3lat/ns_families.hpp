#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/involution.hpp"

namespace k3lat {

enum class Variant { plain, tilde };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// Rank-9 lattices <2d> + E8(-2) (basis L, a1..a8) and, for d even, the
/// index-2 overlattice generated by (L + v)/2.
struct NSFamily {
  long two_d = 0;
  Variant variant = Variant::plain;
  Lattice lattice;
  std::optional<IntVector> glue_v;  // v in E8(-2) coordinates (tilde only)
  Integer det_ratio = 1;            // det(plain) / det(this)
  bool e8_primitive = false;
};

Lattice lambda_2d(long two_d);

/// q of (L/2, v/2) vanishes in A_{Lambda_2d}.
bool tilde_glue_isotropic(long two_d, const IntVector& v);
/// d even and v^2 = 4 mod 8 (d = 2 mod 4) or v^2 = 0 mod 8 (d = 0 mod 4).
bool tilde_congruence(long two_d, const IntVector& v);
/// Error("not_isotropic") when the congruence fails.
NSFamily tilde_family(long two_d, const IntVector& v);
/// Vectors of E8(-2) of norm -4 (d = 2 mod 4) or -8 (d = 0 mod 4), lex order.
std::vector<IntVector> tilde_candidates(long two_d);

/// [plain] for 2d = 2 mod 4, [plain, tilde] for 2d = 0 mod 4; the tilde glue
/// uses the first candidate. Error("bad_argument") unless 2d is positive and even.
std::vector<NSFamily> classify_ns(long two_d);

/// Fingerprints of tilde_family over the first `count` candidates agree.
bool tilde_choice_independent(long two_d, std::size_t count);

struct TranscendentalReport {
  Sublattice complement;
  Fingerprint fingerprint;
  bool primitive = false;
};

/// Orthogonal complement of the sublattice spanned by the columns.
/// Error("not_primitive") when the columns do not span a primitive sublattice.
TranscendentalReport transcendental_fingerprint(const Lattice& ambient, const IntMatrix& ns);

/// U^3 + (N + N glued along the identity), an even unimodular lattice of
/// signature (3,19), with U + (N,0) inside it.
struct StockEmbedding {
  Lattice ambient;
  IntMatrix ns;  // columns
};
StockEmbedding elliptic_ns_embedding();
/// <2n> + E8(-1)^2 inside U^3 + E8(-1)^2 via e + n f in the first U.
StockEmbedding morrison_nikulin_embedding(long n);

struct SquareClassReport {
  long rank_t = 0;
  long d = 0;
  Integer ratio_numerator = 1;
  Integer ratio_denominator = 1;
  bool is_square = false;
};

/// d = 14 - rank_T, ratio 2^(d+2). Error("bad_argument") outside 1..13.
SquareClassReport det_square_class_obstruction(long rank_t);

struct EigenspaceDimensions {
  long h_plus = 0;
  long h_minus = 0;
  long fixed_plus = 0;
  long fixed_minus = 0;
};

EigenspaceDimensions eigenspace_dimensions(long two_d, Variant variant);

enum class Parity { invariant, anti_invariant };

/// Degree-`degree` monomials in `num_vars` variables whose degree in the
/// negated variables is even (invariant) or odd (anti-invariant), skipping
/// the listed exponent vectors.
long count_invariant_monomials(long num_vars, const std::vector<long>& negated, long degree, Parity parity,
                               const std::vector<std::vector<long>>& exclude = {});

struct ModuliCount {
  std::string example;
  std::vector<std::pair<std::string, long>> terms;
  std::string formula;
  long value = 0;
};

/// M2, M6, M4, M4tilde, M8, M8tilde. Error("unsupported") otherwise.
ModuliCount moduli_dimension(const std::string& example);
std::vector<std::string> moduli_examples();

struct MorrisonNikulinReport {
  long n = 0;
  Fingerprint ns;
  Fingerprint t;
  Fingerprint t_as_complement;
  bool ranks_sum_to_22 = false;
  bool signatures_complementary = false;
  bool opposite_q = false;
  bool complement_matches = false;
  bool ok() const { return ranks_sum_to_22 && signatures_complementary && opposite_q && complement_matches; }
};

MorrisonNikulinReport morrison_nikulin_lattices(long n);

}  // namespace k3lat
