#pragma once

#include <vector>

#include "k3lat/disc_form.hpp"
#include "k3lat/fingerprint.hpp"

namespace k3lat {

/// Glue vectors are written in the basis of `base`.
struct GlueData {
  Lattice base;
  std::vector<RatVector> generators;
};

struct Overlattice {
  Lattice lattice;
  RatMatrix basis;      // columns: new basis vectors in base coordinates
  RatMatrix inclusion;  // columns: base basis vectors in new coordinates
  Integer index = 1;    // [overlattice : base] = |H|
};

/// Even overlattice spanned by the base and the glue vectors (basis from the
/// Hermite normal form). Errors: "not_even" (odd base), "not_dual" (a glue
/// vector pairs non-integrally with the base), "not_isotropic" (the message
/// names the first element of H, in coefficient order, with q != 0).
Overlattice glue(const GlueData& g);

bool contains(const Overlattice& o, const RatVector& x);
/// Coordinates of x (given in base coordinates) in the overlattice basis;
/// Error("not_in_lattice") otherwise.
IntVector overlattice_coords(const Overlattice& o, const RatVector& x);

struct PrimitivityReport {
  bool primitive = false;
  std::vector<Integer> cokernel_torsion;  // invariant factors > 1
};

/// Error("rank_deficient") when the columns are dependent.
PrimitivityReport is_primitive(const Lattice& ambient, const IntMatrix& sub);

/// U(2)^3 + N in the basis e1,f1,e2,f2,e3,f3,N1..N7,Nhat.
Lattice u2_cubed_plus_nikulin();
/// (e1+N1+N2+N3+N8)/2, (e2+N1+N5+N6+N8)/2, (e3+N2+N6+N7+N8)/2,
/// (f1+N1+N2+N4+N8)/2, (f2+N1+N5+N7+N8)/2, (f3+N3+N4+N5+N8)/2.
std::vector<RatVector> u2_cubed_nikulin_glue_vectors();
GlueData u2_cubed_nikulin_glue();

/// Applies an isometry of N to the Nikulin part of each glue vector.
GlueData conjugate_nikulin_part(const GlueData& g, const IntMatrix& sigma);

/// N + N glued along the identity of A_N: generators (x, x) for the lifts x
/// of the generators of A_N.
GlueData nikulin_pair_glue();

/// Index of the sublattice spanned by the given vectors; 0 if they do not
/// span a finite-index sublattice.
Integer span_index(const Lattice& l, const std::vector<IntVector>& vectors);

struct N2EmbeddingReport {
  IntMatrix map;  // 16 columns: images in Gamma16 coordinates
  bool isometric = false;
  bool first_primitive = false;
  bool second_primitive = false;
  Integer index = 0;
};

/// (N_i,0) -> e_i + e_{i+8}, (0,N_i) -> e_i - e_{i+8},
/// (Nhat,0) -> (e_1 + ... + e_16)/2, (0,Nhat) -> (e_1+...+e_8 - e_9-...-e_16)/2,
/// into Gamma16(-1).
N2EmbeddingReport embed_N2_in_Gamma16();

}  // namespace k3lat
