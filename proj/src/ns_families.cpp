#include "k3lat/ns_families.hpp"

#include <functional>

#include "k3lat/linalg.hpp"

namespace k3lat {

namespace {

void require_two_d(long two_d) {
  if (two_d <= 0 || two_d % 2 != 0) throw Error("bad_argument", "L^2 = 2d must be positive and even");
}

Rational e8m2_norm(const IntVector& v) {
  static const Lattice e8 = lattice_E8(-2);
  if (v.size() != 8) throw Error("shape", "expected a vector of E8(-2)");
  return Rational(e8.norm(v));
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

std::string to_string(Variant v) { return v == Variant::plain ? "plain" : "tilde"; }

Variant parse_variant(const std::string& s) {
  if (s == "plain") return Variant::plain;
  if (s == "tilde") return Variant::tilde;
  throw Error("bad_argument", "variant must be plain or tilde");
}

Lattice lambda_2d(long two_d) {
  require_two_d(two_d);
  IntMatrix g(1, 1);
  g(0, 0) = two_d;
  Lattice l(g, {"L"}, "<" + std::to_string(two_d) + ">");
  return direct_sum({l, lattice_E8(-2)}, "Lambda_" + std::to_string(two_d));
}

bool tilde_glue_isotropic(long two_d, const IntVector& v) {
  require_two_d(two_d);
  Rational q = Rational(two_d, 4) + e8m2_norm(v) / 4;
  return reduce_mod(q, Rational(2)) == 0;
}

bool tilde_congruence(long two_d, const IntVector& v) {
  require_two_d(two_d);
  long d = two_d / 2;
  if (d % 2 != 0) return false;
  long v2 = mod(e8m2_norm(v).get_num().get_si(), 8);
  return d % 4 == 2 ? v2 == 4 : v2 == 0;
}

std::vector<IntVector> tilde_candidates(long two_d) {
  require_two_d(two_d);
  long d = two_d / 2;
  if (d % 2 != 0) throw Error("bad_argument", "the index-2 overlattice needs d even");
  return enumerate_vectors_of_norm(lattice_E8(-2), Integer(d % 4 == 2 ? -4 : -8));
}

NSFamily tilde_family(long two_d, const IntVector& v) {
  if (!tilde_congruence(two_d, v))
    throw Error("not_isotropic", "(L + v)/2 violates the congruence for 2d = " + std::to_string(two_d));
  Lattice base = lambda_2d(two_d);
  RatVector g(9);
  g[0] = Rational(1, 2);
  for (std::size_t i = 0; i < 8; ++i) {
    g[i + 1] = Rational(v[i], 2);
    g[i + 1].canonicalize();
  }
  Overlattice o = glue({base, {g}});
  NSFamily f;
  f.two_d = two_d;
  f.variant = Variant::tilde;
  f.lattice = o.lattice.renamed("Lambda~_" + std::to_string(two_d));
  f.glue_v = v;
  f.det_ratio = base.determinant() / o.lattice.determinant();
  IntMatrix e8cols(9, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    RatVector e(9, Rational(0));
    e[j + 1] = 1;
    e8cols.set_col(j, overlattice_coords(o, e));
  }
  f.e8_primitive = is_primitive(f.lattice, e8cols).primitive;
  return f;
}

std::vector<NSFamily> classify_ns(long two_d) {
  require_two_d(two_d);
  NSFamily plain;
  plain.two_d = two_d;
  plain.lattice = lambda_2d(two_d);
  IntMatrix e8cols(9, 8);
  for (std::size_t j = 0; j < 8; ++j) e8cols(j + 1, j) = 1;
  plain.e8_primitive = is_primitive(plain.lattice, e8cols).primitive;
  std::vector<NSFamily> out{plain};
  if (two_d % 4 == 0) out.push_back(tilde_family(two_d, tilde_candidates(two_d).front()));
  return out;
}

bool tilde_choice_independent(long two_d, std::size_t count) {
  auto cands = tilde_candidates(two_d);
  Fingerprint first = fingerprint(tilde_family(two_d, cands.front()).lattice);
  for (std::size_t i = 1; i < cands.size() && i < count; ++i)
    if (!(fingerprint(tilde_family(two_d, cands[i]).lattice) == first)) return false;
  return true;
}

TranscendentalReport transcendental_fingerprint(const Lattice& ambient, const IntMatrix& ns) {
  TranscendentalReport r;
  r.primitive = is_primitive(ambient, ns).primitive;
  if (!r.primitive) throw Error("not_primitive", "Neron-Severi embedding is not primitive");
  std::vector<IntVector> cols;
  for (std::size_t c = 0; c < ns.cols(); ++c) cols.push_back(ns.col(c));
  r.complement = orthogonal_complement(ambient, cols);
  r.fingerprint = fingerprint(r.complement.lattice);
  return r;
}

StockEmbedding elliptic_ns_embedding() {
  Overlattice gamma = glue(nikulin_pair_glue());
  StockEmbedding s;
  s.ambient = direct_sum({lattice_U(), lattice_U(), lattice_U(), gamma.lattice}, "U^3+(N+N)~");
  s.ns = IntMatrix(22, 10);
  s.ns(0, 0) = 1;
  s.ns(1, 1) = 1;
  for (std::size_t i = 0; i < 8; ++i) {
    RatVector e(16, Rational(0));
    e[i] = 1;
    IntVector c = overlattice_coords(gamma, e);
    for (std::size_t r = 0; r < 16; ++r) s.ns(6 + r, 2 + i) = c[r];
  }
  return s;
}

StockEmbedding morrison_nikulin_embedding(long n) {
  if (n < 1) throw Error("bad_argument", "n must be positive");
  StockEmbedding s;
  s.ambient = k3_lattice();
  s.ns = IntMatrix(22, 17);
  s.ns(0, 0) = 1;
  s.ns(1, 0) = n;
  for (std::size_t i = 0; i < 16; ++i) s.ns(6 + i, 1 + i) = 1;
  return s;
}

SquareClassReport det_square_class_obstruction(long rank_t) {
  if (rank_t < 1 || rank_t > 13) throw Error("bad_argument", "rank of T must lie in 1..13");
  SquareClassReport r;
  r.rank_t = rank_t;
  r.d = 22 - 8 - rank_t;
  mpz_ui_pow_ui(r.ratio_numerator.get_mpz_t(), 2, static_cast<unsigned long>(r.d + 2));
  r.ratio_denominator = 1;
  r.is_square = mpz_perfect_square_p(r.ratio_numerator.get_mpz_t()) != 0;
  return r;
}

EigenspaceDimensions eigenspace_dimensions(long two_d, Variant variant) {
  require_two_d(two_d);
  if (variant == Variant::tilde) {
    if (two_d % 4 != 0) throw Error("bad_argument", "the tilde family needs L^2 = 0 mod 4");
    long n = two_d / 4;
    return {n + 2, n, 8, 0};
  }
  if (two_d % 4 == 2) {
    long n = (two_d - 2) / 4;
    return {n + 2, n + 1, 6, 2};
  }
  long n = two_d / 4;
  return {n + 1, n + 1, 4, 4};
}

long count_invariant_monomials(long num_vars, const std::vector<long>& negated, long degree, Parity parity,
                               const std::vector<std::vector<long>>& exclude) {
  if (num_vars < 1 || degree < 0) throw Error("bad_argument", "need at least one variable and degree >= 0");
  std::vector<bool> neg(num_vars, false);
  for (long i : negated) {
    if (i < 0 || i >= num_vars) throw Error("bad_argument", "negated variable index out of range");
    neg[i] = true;
  }
  std::vector<long> exps(num_vars, 0);
  long count = 0;
  std::function<void(long, long)> rec = [&](long var, long left) {
    if (var == num_vars - 1) {
      exps[var] = left;
      long odd = 0;
      for (long i = 0; i < num_vars; ++i)
        if (neg[i]) odd += exps[i];
      bool invariant = odd % 2 == 0;
      if (invariant != (parity == Parity::invariant)) return;
      for (const auto& e : exclude)
        if (e == exps) return;
      ++count;
      return;
    }
    for (long k = 0; k <= left; ++k) {
      exps[var] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, degree);
  return count;
}

std::vector<std::string> moduli_examples() { return {"M2", "M6", "M4", "M4tilde", "M8", "M8tilde"}; }

ModuliCount moduli_dimension(const std::string& example) {
  ModuliCount m;
  m.example = example;
  auto inv = [](long n, std::vector<long> s, long d) { return count_invariant_monomials(n, s, d, Parity::invariant); };
  auto anti = [](long n, std::vector<long> s, long d) {
    return count_invariant_monomials(n, s, d, Parity::anti_invariant);
  };
  auto grassmannian = [](long k, long n) { return k * (n - k); };
  auto gl = [](long n) { return n * n; };

  if (example == "M2") {
    long sextics = inv(3, {0}, 6);
    long group = 1 + gl(2);  // C* x GL(2)
    m.terms = {{"invariant sextics", sextics}, {"dim C* x GL(2)", group}};
    m.value = sextics - group;
    m.formula = std::to_string(sextics) + "-(1+" + std::to_string(gl(2)) + ")";
  } else if (example == "M6") {
    long quadrics = inv(5, {0, 1}, 2);
    long cubics = inv(5, {0, 1}, 3);
    long linear = inv(5, {0, 1}, 1);
    long group = gl(2) + gl(3);
    m.terms = {{"invariant quadrics", quadrics},
               {"invariant cubics", cubics},
               {"invariant linear forms", linear},
               {"dim GL(2) x GL(3)", group}};
    m.value = (quadrics - 1) + (cubics - 1) - linear - (group - 1);
    m.formula = "(" + std::to_string(quadrics) + "-1)+(" + std::to_string(cubics) + "-1)-" + std::to_string(linear) +
                "-(" + std::to_string(group) + "-1)";
  } else if (example == "M4") {
    long quartics = inv(4, {0, 1}, 4);
    long group = gl(2) + gl(2);
    m.terms = {{"invariant quartics", quartics}, {"dim GL(2) x GL(2)", group}};
    m.value = quartics - group;
    m.formula = std::to_string(quartics) + "-" + std::to_string(group);
  } else if (example == "M4tilde") {
    long conics = inv(3, {}, 2);
    long quartics = inv(3, {}, 4);
    long group = gl(3);
    m.terms = {{"plane conics", conics}, {"plane quartics", quartics}, {"dim GL(3)", group}};
    m.value = (conics - 1) + (quartics - 1) - (group - 1);
    m.formula = "(" + std::to_string(conics) + "-1)+(" + std::to_string(quartics) + "-1)-(" + std::to_string(group) +
                "-1)";
  } else if (example == "M8") {
    long even = inv(6, {3, 4, 5}, 2);
    long odd = anti(6, {3, 4, 5}, 2);
    long grass = grassmannian(2, even);
    long group = gl(3) + gl(3);
    m.terms = {{"invariant quadrics", even},
               {"anti-invariant quadrics", odd},
               {"Grassmannian G(2, invariant quadrics)", grass},
               {"dim GL(3) x GL(3)", group}};
    m.value = grass + (odd - 1) - (group - 1);
    m.formula = std::to_string(grass) + "+(" + std::to_string(odd) + "-1)-(" + std::to_string(group) + "-1)";
  } else if (example == "M8tilde") {
    long quadrics = inv(6, {4, 5}, 2);
    long grass = grassmannian(3, quadrics);
    m.terms = {{"invariant quadrics", quadrics},
               {"Grassmannian G(3, invariant quadrics)", grass},
               {"dim GL(2)", gl(2)},
               {"dim GL(4)", gl(4)}};
    m.value = grass - (gl(2) + gl(4) - 1);
    m.formula = std::to_string(grass) + "-(" + std::to_string(gl(2)) + "+" + std::to_string(gl(4)) + "-1)";
  } else {
    throw Error("unsupported", "no moduli count for example " + example);
  }
  m.formula += "=" + std::to_string(m.value);
  return m;
}

MorrisonNikulinReport morrison_nikulin_lattices(long n) {
  if (n < 1) throw Error("bad_argument", "n must be positive");
  MorrisonNikulinReport r;
  r.n = n;
  Lattice ns = direct_sum({lattice_rank1(2 * n), lattice_E8(-1), lattice_E8(-1)});
  Lattice t = direct_sum({lattice_rank1(-2 * n), lattice_U(), lattice_U()});
  r.ns = fingerprint(ns);
  r.t = fingerprint(t);
  StockEmbedding e = morrison_nikulin_embedding(n);
  r.t_as_complement = transcendental_fingerprint(e.ambient, e.ns).fingerprint;
  r.ranks_sum_to_22 = r.ns.rank + r.t.rank == 22;
  r.signatures_complementary = r.ns.signature == Signature{1, 16} && r.t.signature == Signature{2, 3};
  r.opposite_q = r.ns.q_histogram && r.t.q_histogram && negated(*r.ns.q_histogram) == *r.t.q_histogram &&
                 r.ns.invariant_factors == r.t.invariant_factors;
  r.complement_matches = r.t_as_complement == r.t;
  return r;
}

}  // namespace k3lat
