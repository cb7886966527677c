#include "k3lat/gluing.hpp"

#include <algorithm>
#include <array>

#include "k3lat/linalg.hpp"

namespace k3lat {

namespace {

std::string format_vector(const RatVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

void check_isotropic(const DiscriminantForm& disc, const std::vector<RatVector>& gens) {
  const Lattice& base = disc.lattice();
  bool ok = true;
  for (std::size_t i = 0; i < gens.size() && ok; ++i) {
    Rational qi = base.pair(gens[i], gens[i]);
    qi.canonicalize();
    if (qi.get_den() != 1 || qi.get_num() % 2 != 0) ok = false;
    for (std::size_t j = i + 1; j < gens.size() && ok; ++j) {
      Rational bij = base.pair(gens[i], gens[j]);
      bij.canonicalize();
      if (bij.get_den() != 1) ok = false;
    }
  }
  if (ok) return;
  std::vector<DiscElement> reduced;
  for (const auto& g : gens) reduced.push_back(disc.reduce(g));
  for (const auto& e : generated_subgroup(disc, reduced))
    if (disc.q(e) != 0)
      throw Error("not_isotropic", "glue is not isotropic: q" + to_string(e) + " = " + to_string(disc.q(e)) +
                                       " at " + format_vector(disc.lift(e)));
}

}  // namespace

Overlattice glue(const GlueData& g) {
  const Lattice& base = g.base;
  const std::size_t n = base.rank();
  if (!base.is_even()) throw Error("not_even", "glue needs an even base lattice");
  for (const auto& v : g.generators) {
    if (v.size() != n) throw Error("shape", "glue vector length does not match the base rank");
  }
  DiscriminantForm disc(base);
  for (const auto& v : g.generators)
    if (!disc.is_dual(v)) throw Error("not_dual", "glue vector " + format_vector(v) + " is not in the dual lattice");
  check_isotropic(disc, g.generators);

  Integer den = 1;
  for (const auto& v : g.generators) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), common_denominator(v).get_mpz_t());
  IntMatrix stacked(n + g.generators.size(), n);
  for (std::size_t i = 0; i < n; ++i) stacked(i, i) = den;
  for (std::size_t k = 0; k < g.generators.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled_entry = g.generators[k][j] * den;
      scaled_entry.canonicalize();
      stacked(n + k, j) = scaled_entry.get_num();
    }
  IntMatrix h = hermite_normal_form(stacked);

  Overlattice o;
  o.basis = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      o.basis(j, i) = Rational(h(i, j), den);
      o.basis(j, i).canonicalize();
    }
  RatMatrix gram = o.basis.transpose() * to_rational(base.gram()) * o.basis;
  o.lattice = Lattice(to_integer(gram), {}, base.name().empty() ? "" : base.name() + "+glue");
  o.inclusion = inverse(o.basis);
  o.index = abs(determinant(to_integer(o.inclusion)));
  if (!o.lattice.is_even()) throw Error("not_isotropic", "overlattice is odd");
  return o;
}

bool contains(const Overlattice& o, const RatVector& x) { return is_integral(o.inclusion * x); }

IntVector overlattice_coords(const Overlattice& o, const RatVector& x) {
  RatVector c = o.inclusion * x;
  if (!is_integral(c)) throw Error("not_in_lattice", "vector is not in the overlattice");
  return to_integer(c);
}

PrimitivityReport is_primitive(const Lattice& ambient, const IntMatrix& sub) {
  if (sub.rows() != ambient.rank()) throw Error("shape", "sublattice rows must match ambient rank");
  if (rank(sub) != sub.cols()) throw Error("rank_deficient", "sublattice columns are linearly dependent");
  PrimitivityReport r;
  for (const auto& d : smith_invariants(sub.transpose()))
    if (d != 1 && d != 0) r.cokernel_torsion.push_back(d);
  r.primitive = r.cokernel_torsion.empty();
  return r;
}

Lattice u2_cubed_plus_nikulin() {
  return direct_sum({lattice_U(2), lattice_U(2), lattice_U(2), lattice_nikulin()}, "U(2)^3+N");
}

std::vector<RatVector> u2_cubed_nikulin_glue_vectors() {
  // (U(2)^3 coordinate, four nodes among N1..N8)
  const std::pair<int, std::array<int, 4>> glue_nodes[6] = {
      {0, {1, 2, 3, 8}}, {2, {1, 5, 6, 8}}, {4, {2, 6, 7, 8}},
      {1, {1, 2, 4, 8}}, {3, {1, 5, 7, 8}}, {5, {3, 4, 5, 8}},
  };
  std::vector<RatVector> out;
  for (const auto& [u, nodes] : glue_nodes) {
    RatVector node_coeffs(8, Rational(0));
    for (int k : nodes) node_coeffs[k - 1] = 1;
    IntVector n = nikulin_coords(node_coeffs);
    RatVector v(14, Rational(0));
    v[u] = Rational(1, 2);
    for (std::size_t i = 0; i < 8; ++i) v[6 + i] = Rational(n[i], 2);
    for (auto& x : v) x.canonicalize();
    out.push_back(std::move(v));
  }
  return out;
}

GlueData u2_cubed_nikulin_glue() { return {u2_cubed_plus_nikulin(), u2_cubed_nikulin_glue_vectors()}; }

GlueData conjugate_nikulin_part(const GlueData& g, const IntMatrix& sigma) {
  GlueData out = g;
  const std::size_t off = g.base.rank() - 8;
  RatMatrix s = to_rational(sigma);
  for (auto& v : out.generators) {
    RatVector tail(v.begin() + off, v.end());
    RatVector img = s * tail;
    std::copy(img.begin(), img.end(), v.begin() + off);
  }
  return out;
}

GlueData nikulin_pair_glue() {
  Lattice n = lattice_nikulin();
  DiscriminantForm disc(n);
  GlueData g{direct_sum({n, n}, "N+N"), {}};
  for (const auto& x : disc.generators()) {
    RatVector v(x.begin(), x.end());
    v.insert(v.end(), x.begin(), x.end());
    g.generators.push_back(std::move(v));
  }
  return g;
}

Integer span_index(const Lattice& l, const std::vector<IntVector>& vectors) {
  const std::size_t n = l.rank();
  if (vectors.size() < n) return 0;
  IntMatrix m(n, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) m.set_col(c, vectors[c]);
  Integer idx = 1;
  for (const auto& d : smith_invariants(m)) idx *= d;
  return idx;
}

N2EmbeddingReport embed_N2_in_Gamma16() {
  N2EmbeddingReport r;
  std::vector<RatVector> images;
  for (int side = 0; side < 2; ++side) {
    Rational sign = side == 0 ? 1 : -1;
    for (std::size_t i = 0; i < 7; ++i) {
      RatVector v(16, Rational(0));
      v[i] = 1;
      v[i + 8] = sign;
      images.push_back(v);
    }
    RatVector hat(16, Rational(0));
    for (std::size_t i = 0; i < 8; ++i) {
      hat[i] = Rational(1, 2);
      hat[i + 8] = sign / 2;
    }
    images.push_back(hat);
  }
  r.map = IntMatrix(16, 16);
  for (std::size_t c = 0; c < 16; ++c) r.map.set_col(c, gamma16_coords(images[c]));

  Lattice gamma = lattice_gamma16(-1);
  Lattice n = lattice_nikulin();
  r.isometric = r.map.transpose() * gamma.gram() * r.map == direct_sum({n, n}).gram();
  IntMatrix first(16, 8), second(16, 8);
  for (std::size_t c = 0; c < 8; ++c) {
    first.set_col(c, r.map.col(c));
    second.set_col(c, r.map.col(c + 8));
  }
  r.first_primitive = is_primitive(gamma, first).primitive;
  r.second_primitive = is_primitive(gamma, second).primitive;
  r.index = sublattice_index(gamma, r.map);
  return r;
}

}  // namespace k3lat
