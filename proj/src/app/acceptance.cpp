#include "k3lat/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "k3lat/elliptic.hpp"
#include "k3lat/ns_families.hpp"

namespace k3lat {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string str(const Integer& n) { return n.get_str(); }

bool same_fingerprint(const Lattice& a, const Lattice& b) { return fingerprint(a) == fingerprint(b); }

void half_vector_glue(Check& c, std::uint64_t) {
  Overlattice o = glue(u2_cubed_nikulin_glue());
  Signature s = signature(o.lattice);
  c.expect(o.lattice.is_even(), "overlattice is not even");
  c.expect(o.lattice.determinant() == -1, "det = " + str(o.lattice.determinant()));
  c.expect(s == Signature{3, 11}, "wrong signature");
  c.expect(o.index == 64, "index = " + str(o.index));
  c.note("det " + str(o.lattice.determinant()) + ", signature (" + std::to_string(s.positive) + "," +
         std::to_string(s.negative) + "), index " + str(o.index));
}

void gamma16_glue(Check& c, std::uint64_t) {
  Overlattice o = glue(nikulin_pair_glue());
  const Lattice& l = o.lattice;
  c.expect(l.rank() == 16, "rank " + std::to_string(l.rank()));
  c.expect(l.is_even() && l.is_unimodular() && l.is_negative_definite(), "not even unimodular negative definite");
  auto t0 = Clock::now();
  auto roots = enumerate_vectors_of_norm(l, -2);
  double secs = since(t0);
  c.expect(roots.size() == 480, "root count " + std::to_string(roots.size()));
  c.expect(secs < 30, "enumeration took " + std::to_string(secs) + " s");
  Integer idx = span_index(l, roots);
  c.expect(idx == 2, "root span index " + str(idx));
  c.note(std::to_string(roots.size()) + " roots, span index " + str(idx));
}

void e8_roots(Check& c, std::uint64_t) {
  auto r1 = enumerate_vectors_of_norm(lattice_E8(-1), -2);
  auto r2 = enumerate_vectors_of_norm(lattice_E8(-2), -2);
  c.expect(r1.size() == 240, "E8(-1) roots " + std::to_string(r1.size()));
  c.expect(r2.empty(), "E8(-2) has norm -2 vectors");
  c.note("E8(-1): " + std::to_string(r1.size()) + ", E8(-2): " + std::to_string(r2.size()));
}

void quotient_maps(Check& c, std::uint64_t) {
  AdjunctionReport r = verify_adjunction();
  c.expect(r.push_iota, "push * iota != push");
  c.expect(r.adjunction, "<push a, b> != <a, pull b>");
  c.expect(r.pull_scales_form, "pull does not scale the form by 2");
  c.expect(r.push_pull, "push * pull != 2 I");
  c.expect(r.pull_nodes, "pull N_i != 2 E_i");
}

void swap_involution(Check& c, std::uint64_t) {
  InvolutionModule m = k3_swap_involution();
  STRInvariants s = str_invariants(m);
  c.expect(s == STRInvariants{6, 0, 8}, "(s,t,r) = (" + std::to_string(s.s) + "," + std::to_string(s.t) + "," +
                                             std::to_string(s.r) + ")");
  InvariantSplit split = invariant_and_antiinvariant(m);
  Lattice plus_ref = direct_sum({lattice_U(), lattice_U(), lattice_U(), lattice_E8(-2)});
  c.expect(same_fingerprint(split.invariant.lattice, plus_ref), "invariant part does not match U^3+E8(-2)");
  c.expect(same_fingerprint(split.anti_invariant.lattice, lattice_E8(-2)), "anti-invariant part does not match E8(-2)");
  c.note("(s,t,r) = (" + std::to_string(s.s) + "," + std::to_string(s.t) + "," + std::to_string(s.r) + ")");
}

void ns_dichotomy(Check& c, std::uint64_t) {
  for (long two_d = 2; two_d <= 40; two_d += 2) {
    auto fams = classify_ns(two_d);
    std::size_t want = two_d % 4 == 2 ? 1 : 2;
    c.expect(fams.size() == want, "2d = " + std::to_string(two_d) + ": " + std::to_string(fams.size()) + " families");
    for (const auto& f : fams)
      if (f.variant == Variant::tilde)
        c.expect(f.det_ratio == 4 && f.e8_primitive && f.lattice.is_even(),
                 "2d = " + std::to_string(two_d) + ": tilde family invariants");
  }

  Lattice e = lattice_E8(-2);
  std::size_t checked = 0;
  for (long norm : {-4L, -8L, -12L}) {
    auto vs = enumerate_vectors_of_norm(e, norm);
    for (long two_d = 2; two_d <= 16; two_d += 2)
      for (const auto& v : vs) {
        ++checked;
        if (tilde_glue_isotropic(two_d, v) != tilde_congruence(two_d, v)) {
          c.expect(false, "glue validity disagrees with the congruence at 2d = " + std::to_string(two_d));
          return;
        }
      }
  }

  DiscriminantForm f(e);
  auto t0 = Clock::now();
  auto orbits = orbits_under_isometries(f, e8_simple_reflections());
  double secs = since(t0);
  c.expect(secs < 5, "orbit closure took " + std::to_string(secs) + " s");
  c.expect(orbits.size() == 3, std::to_string(orbits.size()) + " orbits");
  std::map<Rational, std::size_t> level;
  for (const auto& x : f.elements()) ++level[f.q(x)];
  std::size_t zero_orbits = 0;
  for (const auto& o : orbits) {
    std::set<Rational> qs;
    for (const auto& x : o) qs.insert(f.q(x));
    c.expect(qs.size() == 1, "an orbit mixes q values");
    bool trivial = o.size() == 1 && f.is_zero(o[0]);
    if (trivial) continue;
    if (*qs.begin() == 0) ++zero_orbits;
    std::size_t expected = level[*qs.begin()] - (*qs.begin() == 0 ? 1 : 0);
    c.expect(o.size() == expected, "orbit is not a full q-level set");
  }
  c.expect(zero_orbits == 1, "nonzero isotropic classes split");
  c.note(std::to_string(checked) + " glue checks, 3 orbits in " + std::to_string(secs).substr(0, 5) + " s");
}

void square_class(Check& c, std::uint64_t) {
  for (long rank_t = 1; rank_t <= 13; ++rank_t) {
    SquareClassReport r = det_square_class_obstruction(rank_t);
    long d = 14 - rank_t;
    Integer expected = Integer(1) << static_cast<unsigned long>(d + 2);
    Integer num = r.ratio_numerator, den = r.ratio_denominator;
    c.expect(r.d == d && num == expected * den, "rank_T = " + std::to_string(rank_t) + ": wrong ratio");
    Integer root;
    mpz_sqrt(root.get_mpz_t(), expected.get_mpz_t());
    bool square = root * root == expected;
    c.expect(r.is_square == square && square == (rank_t % 2 == 0), "rank_T = " + std::to_string(rank_t) +
                                                                      ": square class");
  }
}

void moduli_and_eigenspaces(Check& c, std::uint64_t) {
  for (long two_d = 2; two_d <= 40; two_d += 2) {
    EigenspaceDimensions e = eigenspace_dimensions(two_d, Variant::plain);
    if (two_d % 4 == 2) {
      long n = (two_d - 2) / 4;
      c.expect(e.h_plus == n + 2 && e.h_minus == n + 1 && e.fixed_plus == 6 && e.fixed_minus == 2,
               "2d = " + std::to_string(two_d) + " plain");
    } else {
      long n = two_d / 4;
      c.expect(e.h_plus == n + 1 && e.h_minus == n + 1 && e.fixed_plus == 4 && e.fixed_minus == 4,
               "2d = " + std::to_string(two_d) + " plain");
      EigenspaceDimensions t = eigenspace_dimensions(two_d, Variant::tilde);
      c.expect(t.h_plus == n + 2 && t.h_minus == n && t.fixed_plus == 8 && t.fixed_minus == 0,
               "2d = " + std::to_string(two_d) + " tilde");
    }
  }
  const std::map<std::string, std::string> formulas = {
      {"M2", "16-(1+4)=11"},         {"M6", "(9-1)+(19-1)-3-(13-1)=11"},  {"M4", "19-8=11"},
      {"M4tilde", "(6-1)+(15-1)-(9-1)=11"}, {"M8", "20+(9-1)-(18-1)=11"}, {"M8tilde", "30-(4+16-1)=11"}};
  for (const auto& ex : moduli_examples()) {
    ModuliCount m = moduli_dimension(ex);
    c.expect(m.value == 11, ex + " gives " + std::to_string(m.value));
    c.expect(formulas.at(ex) == m.formula, ex + " formula " + m.formula);
  }
  // invariant quartics in x0,x1 | x2,x3 with (x0,x1) negated: degree split 4+0, 2+2, 0+4
  long split = count_invariant_monomials(2, {}, 4, Parity::invariant) +
               count_invariant_monomials(2, {}, 2, Parity::invariant) * count_invariant_monomials(2, {}, 2, Parity::invariant) +
               count_invariant_monomials(2, {}, 4, Parity::invariant);
  c.expect(split == 19 && count_invariant_monomials(4, {0, 1}, 4, Parity::invariant) == 19, "5+9+5 != 19");
}

bool place_divides(const Place& p, const RatPoly& poly) {
  if (p.at_infinity) return false;
  return divides(p.factor, poly);
}

void generic_two_torsion(Check& c, std::uint64_t seed) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    WeierstrassFibration f = random_generic_fibration(seed + k);
    FiberReport r = fiber_configuration(f);
    std::string tag = "seed " + std::to_string(seed + k);
    c.expect(r.weight_on_nodal(1) == 8 && r.weight_on_b(2) == 8 && r.weight(1) == 8 && r.weight(2) == 8,
             tag + ": fiber weights");
    c.expect(r.infinity_type() == 0 && r.euler_sum == 24, tag + ": fiber at infinity");
    FiberReport q = fiber_configuration(two_isogeny_quotient(f));
    c.expect(q.weight(1) == 8 && q.weight(2) == 8, tag + ": quotient weights");
    for (const auto& p : q.places) {
      if (p.n() == 2) c.expect(place_divides(p, f.nodal_factor()), tag + ": quotient I_2 off the nodal locus");
      if (p.n() == 1) c.expect(place_divides(p, f.b()), tag + ": quotient I_1 off the b-locus");
    }
  }
  ShiodaTate st = shioda_tate({{2, 8}, {1, 8}}, 0, 2);
  c.expect(st.picard_rank == 10 && st.ns_discriminant == 64, "Shioda-Tate gives (" + std::to_string(st.picard_rank) +
                                                                  ", " + st.ns_discriminant.get_str() + ")");
  TorsionTranslationReport t = torsion_section_translation_data(random_generic_fibration(seed));
  c.expect(t.ns_matches_u_plus_n && t.tau_sq == -2 && t.tau_sigma == 0 && t.tau_f == 1, "torsion section data");
  StockEmbedding emb = elliptic_ns_embedding();
  TranscendentalReport tr = transcendental_fingerprint(emb.ambient, emb.ns);
  Lattice ref = direct_sum({lattice_U(), lattice_U(), lattice_nikulin()});
  c.expect(tr.fingerprint == fingerprint(ref), "transcendental fingerprint differs from U^2+N");
  c.expect(tr.fingerprint.signature == Signature{2, 10}, "transcendental signature");
}

void i16_family(Check& c, std::uint64_t seed) {
  for (std::uint64_t k = 0; k < 5; ++k) {
    WeierstrassFibration f = random_i16_fibration(seed + k);
    std::string tag = "seed " + std::to_string(seed + k);
    FiberReport r = fiber_configuration(f);
    c.expect(r.weight(1) == 8 && r.infinity_type() == 16 && r.all_multiplicative, tag + ": 8 I_1 + I_16");
    WeierstrassFibration g = two_isogeny_quotient(f);
    FiberReport q = fiber_configuration(g);
    c.expect(q.weight(2) == 8 && q.infinity_type() == 8 && q.all_multiplicative, tag + ": 8 I_2 + I_8");
    WeierstrassFibration h = two_isogeny_quotient(g);
    c.expect(h.a() == Rational(4) * f.a() && h.b() == Rational(16) * f.b(), tag + ": double quotient");
  }
  for (std::uint64_t k = 0; k < 5; ++k) {
    WeierstrassFibration f = random_generic_fibration(seed + 100 + k);
    WeierstrassFibration h = two_isogeny_quotient(two_isogeny_quotient(f));
    c.expect(h.a() == Rational(4) * f.a() && h.b() == Rational(16) * f.b(), "double quotient (generic)");
  }
  ShiodaTate st = shioda_tate({{16, 1}, {1, 8}}, 0, 2);
  c.expect(st.picard_rank == 17 && st.ns_discriminant == 4, "Shioda-Tate gives (" + std::to_string(st.picard_rank) +
                                                                 ", " + st.ns_discriminant.get_str() + ")");
  MorrisonNikulinReport mn = morrison_nikulin_lattices(2);
  Lattice ns_ref = direct_sum({lattice_rank1(4), lattice_E8(-1), lattice_E8(-1)});
  Lattice t_ref = direct_sum({lattice_rank1(-4), lattice_U(), lattice_U()});
  c.expect(mn.ns == fingerprint(ns_ref), "NS fingerprint differs from <4>+E8(-1)^2");
  c.expect(mn.t == fingerprint(t_ref), "T fingerprint differs from <-4>+U^2");
  c.expect(mn.ns.q_histogram && mn.t.q_histogram && negated(*mn.ns.q_histogram) == *mn.t.q_histogram,
           "q histograms are not opposite");
  I16Report i = i16_component_permutation();
  c.expect(i.involution && i.swaps_chains && i.chains_are_a7 && i.e8_pair_ok, "I_16 component permutation");
}

Integer abs_det(const Lattice& l) { return abs(l.determinant()); }

std::vector<Lattice> stock_lattices() {
  std::vector<Lattice> out = {lattice_U(),        lattice_U(2),       lattice_E8(-1),        lattice_E8(-2),
                              lattice_nikulin(),  lattice_nikulin(2), lattice_gamma16(-1),   lattice_rank1(2),
                              lattice_rank1(-4),  lattice_rank1(6),   u2_cubed_plus_nikulin(), k3_lattice()};
  for (long n = 1; n <= 8; ++n) out.push_back(lattice_A(n, -1));
  for (long two_d = 2; two_d <= 12; two_d += 2) out.push_back(lambda_2d(two_d));
  return out;
}

void property_suites(Check& c, std::uint64_t) {
  std::size_t forms = 0, pairs = 0;
  for (const Lattice& l : stock_lattices()) {
    DiscriminantForm f(l);
    c.expect(f.order() == abs_det(l), "|A| != |det| for " + l.name());
    if (f.order() > 64) continue;
    ++forms;
    auto els = f.elements();
    for (const auto& x : els)
      for (const auto& y : els) {
        ++pairs;
        Rational lhs = f.q(f.add(x, y)) - f.q(x) - f.q(y) - 2 * f.b(x, y);
        Rational twice = lhs / 2;
        c.expect(twice.get_den() == 1, "polarization fails for " + l.name());
      }
  }
  for (long n = 1; n <= 6; ++n)
    for (long mask = 0; mask < (1L << n); ++mask) {
      std::vector<long> neg;
      for (long i = 0; i < n; ++i)
        if (mask >> i & 1) neg.push_back(i);
      for (long d = 0; d <= 6; ++d) {
        long total = count_invariant_monomials(n, neg, d, Parity::invariant) +
                     count_invariant_monomials(n, neg, d, Parity::anti_invariant);
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), n + d - 1, d);
        c.expect(binom == total, "monomial count for n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
  std::vector<GlueData> glues = {u2_cubed_nikulin_glue(), nikulin_pair_glue()};
  for (const auto& sigma : nikulin_s8_generators()) glues.push_back(conjugate_nikulin_part(u2_cubed_nikulin_glue(), sigma));
  for (const auto& g : glues) {
    Overlattice o = glue(g);
    c.expect(o.lattice.determinant() * o.index * o.index == g.base.determinant(), "glue determinant law");
  }
  for (long two_d = 4; two_d <= 40; two_d += 4) {
    auto fams = classify_ns(two_d);
    c.expect(fams[0].lattice.determinant() == 4 * fams[1].lattice.determinant(),
             "tilde determinant law at 2d = " + std::to_string(two_d));
  }
  c.note(std::to_string(forms) + " forms, " + std::to_string(pairs) + " pairs, " + std::to_string(glues.size()) +
         " glues");
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<void(Check&, std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "U(2)^3+N glued by six half-vectors: even, det -1, signature (3,11), index 64", 1, half_vector_glue},
      {2, "N+N identity glue: even unimodular rank 16, 480 roots spanning index 2", 30, gamma16_glue},
      {3, "E8(-1) has 240 roots, E8(-2) has none", 10, e8_roots},
      {4, "quotient map identities (push/pull adjunction, scaling, nodes)", 10, quotient_maps},
      {5, "swap involution on U^3+E8(-1)^2: (s,t,r) = (6,0,8) and eigenlattice fingerprints", 10, swap_involution},
      {6, "NS dichotomy for 2d <= 40, tilde glue congruences, W(E8) orbits on A_E8(-2)", 30, ns_dichotomy},
      {7, "determinant square class ratio 2^(d+2), d = 14 - rank T", 1, square_class},
      {8, "eigenspace dimensions and the six moduli counts equal 11", 5, moduli_and_eigenspaces},
      {9, "generic two-torsion fibrations: 8 I_2 + 8 I_1, quotient swap, Picard data", 30, generic_two_torsion},
      {10, "I_16 family, its quotient, Picard data, Morrison-Nikulin lattices", 30, i16_family},
      {11, "property suites: |A| = |det|, polarization, monomial counts, glue determinant law", 30, property_suites},
  };
  return list;
}

CriterionResult execute(const Criterion& cr, std::uint64_t seed) {
  CriterionResult r;
  r.id = cr.id;
  r.title = cr.title;
  r.limit_seconds = cr.limit;
  Check c;
  auto t0 = Clock::now();
  try {
    cr.run(c, seed);
  } catch (const Error& e) {
    c.failures.push_back("error " + e.code() + ": " + e.what());
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = since(t0);
  if (r.seconds > cr.limit) c.failures.push_back("exceeded time limit");
  r.passed = c.failures.empty();
  std::ostringstream os;
  const auto& parts = r.passed ? c.notes : c.failures;
  for (std::size_t i = 0; i < parts.size() && i < 5; ++i) os << (i ? "; " : "") << parts[i];
  if (parts.size() > 5) os << "; ... (" << parts.size() << " total)";
  r.detail = os.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const auto& cr : criteria()) out.push_back(execute(cr, seed));
  return out;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  for (const auto& cr : criteria())
    if (cr.id == id) return execute(cr, seed);
  throw Error("bad_argument", "no criterion " + std::to_string(id));
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << std::setw(2) << r.id << "] " << r.title << " (" << std::fixed
     << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0) << r.limit_seconds << " s)";
  if (!r.detail.empty()) os << " :: " << r.detail;
  return os.str();
}

}  // namespace k3lat
