#include "k3lat/involution.hpp"

#include "k3lat/linalg.hpp"

namespace k3lat {

namespace {

IntMatrix saturated_eigenspace(const IntMatrix& g, long eigenvalue) {
  IntMatrix m = g;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= eigenvalue;
  return integer_kernel(m);
}

CohomologyModel build_model() {
  CohomologyModel c;
  Lattice e8 = lattice_E8(-1);
  std::vector<Lattice> minus_ones(8, lattice_rank1(-1));
  std::vector<Lattice> xparts{lattice_U(), lattice_U(), lattice_U(), e8, e8};
  xparts.insert(xparts.end(), minus_ones.begin(), minus_ones.end());
  c.x_tilde = direct_sum(xparts, "U^3+E8(-1)^2+<-1>^8");
  c.y_sub = direct_sum({lattice_U(2), lattice_U(2), lattice_U(2), lattice_nikulin(), e8}, "U(2)^3+N+E8(-1)");
  c.y_glue = glue(u2_cubed_nikulin_glue());
  c.y_full = direct_sum({c.y_glue.lattice, e8}, "H2(Y)");

  c.push = IntMatrix(22, 30);
  c.pull = IntMatrix(30, 22);
  for (std::size_t i = 0; i < 6; ++i) {
    c.push(i, i) = 1;
    c.pull(i, i) = 2;
  }
  for (std::size_t i = 0; i < 8; ++i) {
    c.push(14 + i, 6 + i) = 1;
    c.push(14 + i, 14 + i) = 1;
    c.pull(6 + i, 14 + i) = 1;
    c.pull(14 + i, 14 + i) = 1;
  }
  for (std::size_t i = 0; i < 7; ++i) {
    c.push(6 + i, 22 + i) = 1;   // E_i -> N_i
    c.pull(22 + i, 6 + i) = 2;   // N_i -> 2E_i
  }
  for (std::size_t i = 0; i < 7; ++i) c.push(6 + i, 29) = -1;  // E_8 -> N_8 = 2Nhat - N_1 - ... - N_7
  c.push(13, 29) = 2;
  for (std::size_t i = 0; i < 8; ++i) c.pull(22 + i, 13) = 1;  // Nhat -> E_1 + ... + E_8

  c.iota = IntMatrix::identity(30);
  for (std::size_t i = 0; i < 8; ++i) {
    c.iota(6 + i, 6 + i) = 0;
    c.iota(14 + i, 14 + i) = 0;
    c.iota(6 + i, 14 + i) = 1;
    c.iota(14 + i, 6 + i) = 1;
  }
  return c;
}

}  // namespace

void validate(const InvolutionModule& m) {
  const std::size_t n = m.lattice.rank();
  if (m.action.rows() != n || m.action.cols() != n) throw Error("shape", "action must be rank x rank");
  if (m.action * m.action != IntMatrix::identity(n)) throw Error("not_involution", "g^2 is not the identity");
  if (m.action.transpose() * m.lattice.gram() * m.action != m.lattice.gram())
    throw Error("not_isometry", "g does not preserve the form");
}

STRInvariants str_invariants(const InvolutionModule& m) {
  validate(m);
  IntMatrix plus = saturated_eigenspace(m.action, 1);
  IntMatrix minus = saturated_eigenspace(m.action, -1);
  STRInvariants out;
  Integer index = plus.cols() + minus.cols() == 0 ? Integer(1) : abs(determinant(hstack(plus, minus)));
  while (index > 1) {
    if (index % 2 != 0) throw Error("internal", "eigenlattice index is not a power of two");
    index /= 2;
    ++out.r;
  }
  out.s = plus.cols() - out.r;
  out.t = minus.cols() - out.r;
  return out;
}

InvariantSplit invariant_and_antiinvariant(const InvolutionModule& m) {
  validate(m);
  InvariantSplit out;
  out.invariant = sublattice(m.lattice, saturated_eigenspace(m.action, 1));
  std::vector<IntVector> basis;
  for (std::size_t c = 0; c < out.invariant.embedding.cols(); ++c) basis.push_back(out.invariant.embedding.col(c));
  out.anti_invariant = basis.empty() ? sublattice(m.lattice, IntMatrix::identity(m.lattice.rank()))
                                     : orthogonal_complement(m.lattice, basis);
  out.invariant_primitive = out.invariant.embedding.cols() == 0 ||
                            is_primitive(m.lattice, out.invariant.embedding).primitive;
  out.anti_invariant_primitive = out.anti_invariant.embedding.cols() == 0 ||
                                 is_primitive(m.lattice, out.anti_invariant.embedding).primitive;
  return out;
}

Lattice k3_lattice() {
  Lattice e8 = lattice_E8(-1);
  return direct_sum({lattice_U(), lattice_U(), lattice_U(), e8, e8}, "U^3+E8(-1)^2");
}

InvolutionModule k3_swap_involution() {
  IntMatrix g = IntMatrix::identity(22);
  for (std::size_t i = 0; i < 8; ++i) {
    g(6 + i, 6 + i) = 0;
    g(14 + i, 14 + i) = 0;
    g(6 + i, 14 + i) = 1;
    g(14 + i, 6 + i) = 1;
  }
  return {k3_lattice(), g};
}

const CohomologyModel& cohomology_model() {
  static const CohomologyModel model = build_model();
  return model;
}

IntVector pi_push(const IntVector& v) {
  if (v.size() != 30) throw Error("shape", "expected a rank-30 vector");
  return cohomology_model().push * v;
}

IntVector pi_pull(const IntVector& w) {
  if (w.size() != 22) throw Error("shape", "expected a rank-22 vector");
  return cohomology_model().pull * w;
}

IntVector pi_pull_extended(const RatVector& w) {
  if (w.size() != 22) throw Error("shape", "expected a rank-22 vector");
  const CohomologyModel& c = cohomology_model();
  RatVector head(w.begin(), w.begin() + 14);
  RatVector tail(w.begin() + 14, w.end());
  if (!contains(c.y_glue, head) || !is_integral(tail))
    throw Error("not_in_lattice", "vector is not in the glued Y lattice");
  RatVector twice(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) twice[i] = 2 * w[i];
  IntVector image = c.pull * to_integer(twice);
  RatVector half(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) half[i] = Rational(image[i], 2);
  for (auto& x : half) x.canonicalize();
  if (!is_integral(half)) throw Error("internal", "extended pullback is not integral");
  return to_integer(half);
}

AdjunctionReport verify_adjunction() {
  const CohomologyModel& c = cohomology_model();
  const IntMatrix& gx = c.x_tilde.gram();
  const IntMatrix& gy = c.y_sub.gram();
  AdjunctionReport r;
  r.push_iota = c.push * c.iota == c.push;
  r.adjunction = c.push.transpose() * gy == gx * c.pull;
  r.pull_scales_form = c.pull.transpose() * gx * c.pull == Integer(2) * gy;
  r.push_pull = c.push * c.pull == Integer(2) * IntMatrix::identity(22);
  r.pull_nodes = true;
  for (std::size_t i = 0; i < 8; ++i) {
    IntVector n(22, Integer(0));
    IntVector expect(30, Integer(0));
    expect[22 + i] = 2;
    if (i < 7) {
      n[6 + i] = 1;
    } else {
      // N_8 = 2 Nhat - N_1 - ... - N_7
      for (std::size_t j = 0; j < 7; ++j) n[6 + j] = -1;
      n[13] = 2;
    }
    if (c.pull * n != expect) r.pull_nodes = false;
  }
  r.y_full_unimodular = c.y_full.rank() == 22 && c.y_full.determinant() == -1 && c.y_full.is_even() &&
                        signature(c.y_full) == Signature{3, 19};
  r.str = str_invariants(k3_swap_involution());
  return r;
}

}  // namespace k3lat
