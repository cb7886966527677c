#pragma once

#include "k3lat/gluing.hpp"

namespace k3lat {

/// A lattice with an isometric involution g (columns are images of basis vectors).
struct InvolutionModule {
  Lattice lattice;
  IntMatrix action;
};

/// Error("not_involution") unless g^2 = I; Error("not_isometry") unless g^T G g = G.
void validate(const InvolutionModule& m);

/// (M, g) = M_1^s + M_{-1}^t + M_p^r.
struct STRInvariants {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t r = 0;

  bool operator==(const STRInvariants&) const = default;
};

/// r = log2 [M : M+ (+) M-], s = rank M+ - r, t = rank M- - r.
STRInvariants str_invariants(const InvolutionModule& m);

struct InvariantSplit {
  Sublattice invariant;
  Sublattice anti_invariant;
  bool invariant_primitive = false;
  bool anti_invariant_primitive = false;
};

InvariantSplit invariant_and_antiinvariant(const InvolutionModule& m);

/// U^3 + E8(-1)^2 with (u, x, y) -> (u, y, x).
Lattice k3_lattice();
InvolutionModule k3_swap_involution();

/// Lattices and maps of the quotient correspondence:
///   X~ = U^3 + E8(-1) + E8(-1) + <-1>^8   (basis u1..u6, x1..x8, y1..y8, E1..E8)
///   Y  = U(2)^3 + N + E8(-1)              (basis u1..u6, N1..N7, Nhat, x1..x8)
/// push: (u, x, y, z) -> (u, sum z_i N_i, x + y)
/// pull: (u, n, x) -> (2u, x, x, 2n~) with N_i -> 2E_i, Nhat -> E1 + ... + E8.
struct CohomologyModel {
  Lattice x_tilde;
  Lattice y_sub;
  Overlattice y_glue;  // U(2)^3 + N glued to an even unimodular lattice
  Lattice y_full;      // y_glue.lattice + E8(-1)
  IntMatrix push;      // 22 x 30
  IntMatrix pull;      // 30 x 22
  IntMatrix iota;      // 30 x 30, swaps the two E8(-1) blocks
};

const CohomologyModel& cohomology_model();

IntVector pi_push(const IntVector& v);
IntVector pi_pull(const IntVector& w);
/// w in Y coordinates, lying in the glued lattice + E8(-1); returns
/// pull(2w)/2, which is integral. Error("not_in_lattice") otherwise.
IntVector pi_pull_extended(const RatVector& w);

struct AdjunctionReport {
  bool push_iota = false;        // push * iota = push
  bool adjunction = false;       // push^T G_Y = G_X pull
  bool pull_scales_form = false; // pull^T G_X pull = 2 G_Y
  bool push_pull = false;        // push * pull = 2 I
  bool pull_nodes = false;       // pull N_i = 2 E_i
  bool y_full_unimodular = false;
  STRInvariants str;
  bool ok() const {
    return push_iota && adjunction && pull_scales_form && push_pull && pull_nodes && y_full_unimodular &&
           str == STRInvariants{6, 0, 8};
  }
};

AdjunctionReport verify_adjunction();

}  // namespace k3lat
