#pragma once

#include <string>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  bool operator==(const Signature&) const = default;
};

/// A free Z-module of finite rank with a nondegenerate symmetric integral
/// bilinear form, given by its Gram matrix in a fixed basis. Immutable.
class Lattice {
 public:
  Lattice() = default;
  /// Throws Error("shape") for non-square/asymmetric input and
  /// Error("degenerate") when det(gram) = 0.
  explicit Lattice(IntMatrix gram, std::vector<std::string> labels = {}, std::string name = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  const Integer& determinant() const { return det_; }
  /// x.x in 2Z for all x, i.e. every diagonal entry is even.
  bool is_even() const;
  bool is_unimodular() const { return det_ == 1 || det_ == -1; }
  bool is_negative_definite() const;
  bool is_positive_definite() const;

  Integer pair(const IntVector& x, const IntVector& y) const;
  Rational pair(const RatVector& x, const RatVector& y) const;
  Integer norm(const IntVector& x) const { return pair(x, x); }

  Lattice renamed(std::string name) const;
  /// Index of the basis vector with this label; throws if absent.
  std::size_t label_index(const std::string& label) const;

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
  std::string name_;
  Integer det_ = 1;
};

/// Counts of positive and negative pivots via exact symmetric elimination.
/// Throws Error("degenerate") when the form has a radical.
Signature signature(const Lattice& l);
Signature signature_of(const IntMatrix& gram);

Integer determinant(const Lattice& l);

enum class StandardKind { U, E8, A, Rank1, NikulinN, Gamma16 };

StandardKind parse_standard_kind(const std::string& name);
std::string to_string(StandardKind kind);

/// Gram matrix of a named lattice scaled by twist. `param` is n for A_n and
/// m for rank1(m); ignored otherwise.
Lattice make_standard(StandardKind kind, const Integer& twist = 1, long param = 0);

Lattice lattice_U(const Integer& twist = 1);
Lattice lattice_E8(const Integer& twist = 1);
Lattice lattice_A(long n, const Integer& twist = 1);
Lattice lattice_rank1(const Integer& m);
/// Basis {N1..N7, Nhat} with Nhat = (N1+...+N8)/2; negative definite.
Lattice lattice_nikulin(const Integer& twist = 1);
/// Positive definite Gamma16 in the basis of D16 roots e2-e3..e15-e16,
/// e15+e16 and the half-sum h.
Lattice lattice_gamma16(const Integer& twist = 1);

/// M(n): same module, form multiplied by n. n = 0 is rejected.
Lattice twist(const Lattice& l, const Integer& n);

/// Block-diagonal sum. Labels that collide across parts get a "_k" suffix
/// (k = 1-based part index).
Lattice direct_sum(const std::vector<Lattice>& parts, std::string name = {});

/// Coordinates (in the Nikulin basis {N1..N7, Nhat}) of sum_i c_i N_i for
/// the eight nodal classes N1..N8, where N8 = 2 Nhat - N1 - ... - N7.
/// Throws if the result is not in the lattice.
IntVector nikulin_coords(const RatVector& node_coeffs);
/// Coefficients on N1..N8 (possibly half-integers) of a vector given in the
/// Nikulin basis.
RatVector nikulin_node_coeffs(const IntVector& coords);

/// Gamma16 membership: 2x_i in Z, x_i - x_j in Z, sum x_i in 2Z.
bool gamma16_contains(const RatVector& x);
/// Ambient Q^16 coordinates of the Gamma16 basis vectors (columns).
RatMatrix gamma16_basis_vectors();
/// Coordinates in the Gamma16 basis of an element of Q^16; throws
/// Error("not_in_lattice") when x is not in Gamma16.
IntVector gamma16_coords(const RatVector& x);

/// A sublattice with its integral embedding (columns are the sublattice
/// basis vectors in ambient coordinates).
struct Sublattice {
  Lattice lattice;
  IntMatrix embedding;
};

/// Saturated integer kernel of the pairing with S. Throws
/// Error("isotropic_complement") when the complement is degenerate.
Sublattice orthogonal_complement(const Lattice& l, const std::vector<IntVector>& s);

/// Sublattice spanned by the given columns with the induced Gram.
Sublattice sublattice(const Lattice& l, const IntMatrix& columns);

/// |det S| for a square nonsingular coordinate matrix; Error("singular") otherwise.
Integer sublattice_index(const Lattice& l, const IntMatrix& s);

}  // namespace k3lat
