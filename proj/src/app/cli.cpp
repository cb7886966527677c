#include "k3lat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "k3lat/acceptance.hpp"
#include "k3lat/elliptic.hpp"
#include "k3lat/ns_families.hpp"

namespace k3lat {

namespace {

struct Output {
  Json payload;
  std::string text;  // overrides the generic rendering when set
  std::vector<std::string> diagnostics;
  std::string fail_code;  // nonempty: report as a domain failure with this payload
};

using Action = std::function<Output()>;

std::string read_source(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot read " + path);
    os << in.rdbuf();
  }
  return os.str();
}

Integer parse_integer(const std::string& s, const std::string& what) {
  try {
    return integer_from_json(Json(s));
  } catch (const Error&) {
    throw Error("bad_argument", what + " must be an integer, got \"" + s + "\"");
  }
}

Lattice std_token(const std::string& token) {
  static const std::regex re(R"(^(U|E8|N|Gamma16|K3|A(\d+)|<(-?\d+)>)(\((-?\d+)\))?$)");
  std::smatch m;
  if (!std::regex_match(token, m, re)) throw Error("unknown_kind", "unknown standard lattice \"" + token + "\"");
  Integer tw = m[5].matched ? parse_integer(m[5].str(), "twist") : Integer(1);
  if (tw == 0) throw Error("bad_argument", "twist must be nonzero");
  std::string base = m[1].str();
  Lattice l;
  if (base == "U") l = lattice_U(tw);
  else if (base == "E8") l = lattice_E8(tw);
  else if (base == "N") l = lattice_nikulin(tw);
  else if (base == "Gamma16") l = lattice_gamma16(tw);
  else if (base == "K3") l = tw == 1 ? k3_lattice() : twist(k3_lattice(), tw);
  else if (m[2].matched) {
    long n = std::stol(m[2].str());
    if (n < 1 || n > 64) throw Error("bad_argument", "A_n needs 1 <= n <= 64");
    l = lattice_A(n, tw);
  } else {
    Integer k = parse_integer(m[3].str(), "rank-one norm");
    if (k == 0) throw Error("degenerate", "<0> is degenerate");
    l = lattice_rank1(k * tw);
  }
  return l.renamed(token);
}

/// "U(2)+U(2)+N", "E8(-1)", "A7(-1)", "<4>", "K3".
Lattice parse_std_expression(const std::string& expr) {
  std::vector<Lattice> parts;
  std::stringstream ss(expr);
  std::string token;
  while (std::getline(ss, token, '+')) parts.push_back(std_token(token));
  if (parts.empty()) throw Error("unknown_kind", "empty lattice expression");
  if (parts.size() == 1) return parts[0];
  return direct_sum(parts, expr);
}

struct LatticeInput {
  std::string std_expr;
  std::string twist = "1";
  std::string input;
  std::string gram;

  void attach(CLI::App* app) {
    app->add_option("--std", std_expr, "standard lattice, e.g. E8, U(2)+U(2)+N, A7(-1), <4>, K3");
    app->add_option("--twist", twist, "multiply the form by this integer");
    app->add_option("--input,-i", input, "lattice JSON file ('-' for stdin)");
    app->add_option("--gram", gram, "Gram matrix as a JSON array of rows");
  }

  Lattice load() const {
    int given = !std_expr.empty() + !input.empty() + !gram.empty();
    if (given != 1) throw Error("bad_argument", "give exactly one of --std, --input, --gram");
    Lattice l;
    if (!input.empty()) l = lattice_from_json(parse_json(read_source(input)));
    else if (!gram.empty()) l = Lattice(int_matrix_from_json(parse_json(gram)));
    else l = parse_std_expression(std_expr);
    Integer tw = parse_integer(twist, "twist");
    if (tw != 1) l = k3lat::twist(l, tw);
    return l;
  }
};

RatPoly parse_poly_arg(const std::string& s, const std::string& what) {
  if (s.empty()) throw Error("bad_argument", what + " is required");
  return RatPoly::parse(s);
}

Json signature_json(const Signature& s) { return Json::array({s.positive, s.negative}); }

Json histogram_json(const QHistogram& h) {
  Json out = Json::object();
  for (const auto& [k, v] : h) out[k] = v;
  return out;
}

Json fingerprint_json(const Fingerprint& f) {
  Json out;
  out["rank"] = f.rank;
  out["signature"] = signature_json(f.signature);
  out["det"] = to_json(f.determinant);
  out["even"] = f.even;
  out["invariant_factors"] = to_json(IntVector(f.invariant_factors));
  if (f.q_histogram) out["q_histogram"] = histogram_json(*f.q_histogram);
  return out;
}

Json columns_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t k = 0; k < m.cols(); ++k) out.push_back(to_json(m.col(k)));
  return out;
}

Json fibers_json(const FiberReport& r) {
  Json places = Json::array();
  for (const auto& p : r.places) {
    Json j;
    j["place"] = p.at_infinity ? std::string("infinity") : p.factor.to_string();
    j["degree"] = p.degree;
    j["order"] = p.order;
    j["kodaira"] = p.kodaira;
    j["on_b"] = p.divides_b;
    j["on_nodal"] = p.divides_nodal;
    places.push_back(j);
  }
  Json counts = Json::object();
  for (const auto& [n, k] : r.fiber_counts()) counts["I_" + std::to_string(n)] = k;
  Json out;
  out["places"] = places;
  out["fiber_counts"] = counts;
  out["infinity"] = r.infinity_type() ? Json("I_" + std::to_string(r.infinity_type())) : Json(nullptr);
  out["euler_sum"] = r.euler_sum;
  out["all_multiplicative"] = r.all_multiplicative;
  out["normalization"] = r.normalization;
  return out;
}

Json model_json(const WeierstrassFibration& f) {
  Json out;
  out["a"] = f.a().to_coeff_string();
  out["b"] = f.b().to_coeff_string();
  out["a_poly"] = f.a().to_string();
  out["b_poly"] = f.b().to_string();
  out["discriminant"] = f.discriminant().to_string();
  return out;
}

Json family_json(const NSFamily& f) {
  Json out;
  out["variant"] = to_string(f.variant);
  out["L2"] = f.two_d;
  Fingerprint fp = fingerprint(f.lattice);
  out["rank"] = fp.rank;
  out["det"] = to_json(fp.determinant);
  out["signature"] = signature_json(fp.signature);
  out["even"] = fp.even;
  out["det_ratio"] = to_json(f.det_ratio);
  out["e8_primitive"] = f.e8_primitive;
  if (f.glue_v) out["glue_v"] = to_json(*f.glue_v);
  out["lattice"] = lattice_to_json(f.lattice);
  return out;
}

Json moduli_json(const ModuliCount& m) {
  Json terms = Json::object();
  for (const auto& [k, v] : m.terms) terms[k] = v;
  Json out;
  out["example"] = m.example;
  out["terms"] = terms;
  out["formula"] = m.formula;
  out["value"] = m.value;
  return out;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  std::string pad(indent, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); })))
        return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !flat(v))) {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      } else {
        os << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array() && !flat(j)) {
    for (const auto& v : j) {
      os << pad << "-\n";
      render(os, v, indent + 2);
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

struct Context {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  Action action;
};

void add_lattice_commands(CLI::App& app, Context& ctx) {
  auto* lat = app.add_subcommand("lattice", "lattice invariants, vectors and JSON");
  lat->require_subcommand(1);

  auto info_in = std::make_shared<LatticeInput>();
  auto* info = lat->add_subcommand("info", "rank, determinant, parity, signature");
  info_in->attach(info);
  info->callback([&ctx, info_in] {
    ctx.action = [info_in] {
      Lattice l = info_in->load();
      Output o;
      o.payload["rank"] = l.rank();
      o.payload["det"] = to_json(l.determinant());
      o.payload["even"] = l.is_even();
      o.payload["signature"] = signature_json(signature(l));
      return o;
    };
  });

  auto fp_in = std::make_shared<LatticeInput>();
  auto* fp = lat->add_subcommand("fingerprint", "isometry invariants including the discriminant form histogram");
  fp_in->attach(fp);
  fp->callback([&ctx, fp_in] {
    ctx.action = [fp_in] {
      Output o;
      o.payload = fingerprint_json(fingerprint(fp_in->load()));
      return o;
    };
  });

  struct VecOpts {
    LatticeInput in;
    std::string norm;
    bool serial = false;
    bool count_only = false;
  };
  auto vo = std::make_shared<VecOpts>();
  auto* vec = lat->add_subcommand("vectors", "all vectors of a given norm in a definite lattice");
  vo->in.attach(vec);
  vec->add_option("--norm", vo->norm, "target norm x.x")->required();
  vec->add_flag("--serial", vo->serial, "use the serial reference enumeration");
  vec->add_flag("--count-only", vo->count_only, "omit the vector list");
  vec->callback([&ctx, vo] {
    ctx.action = [vo] {
      Lattice l = vo->in.load();
      Integer norm = parse_integer(vo->norm, "--norm");
      auto vs = enumerate_vectors_of_norm(l, norm, vo->serial ? Execution::serial : Execution::parallel);
      Output o;
      o.payload["norm"] = to_json(norm);
      o.payload["count"] = vs.size();
      if (!vo->count_only) {
        Json arr = Json::array();
        for (const auto& v : vs) arr.push_back(to_json(v));
        o.payload["vectors"] = arr;
      }
      return o;
    };
  });

  auto emit_in = std::make_shared<LatticeInput>();
  auto* emit = lat->add_subcommand("emit", "print the lattice in JSON form");
  emit_in->attach(emit);
  emit->callback([&ctx, emit_in] {
    ctx.action = [emit_in] {
      Output o;
      o.payload = lattice_to_json(emit_in->load());
      o.text = o.payload.dump() + "\n";
      return o;
    };
  });
}

void add_disc_command(CLI::App& app, Context& ctx) {
  struct Opts {
    LatticeInput in;
    long isotropic = 0;
    bool serial = false;
  };
  auto op = std::make_shared<Opts>();
  auto* disc = app.add_subcommand("disc", "discriminant group and q histogram of an even lattice");
  op->in.attach(disc);
  disc->add_option("--isotropic", op->isotropic, "also count isotropic subgroups of this order");
  disc->add_flag("--serial", op->serial, "use the serial reference histogram");
  disc->callback([&ctx, op] {
    ctx.action = [op] {
      DiscriminantForm f(op->in.load());
      Output o;
      o.payload["invariant_factors"] = to_json(f.invariant_factors());
      o.payload["elements"] = to_json(f.order());
      o.payload["q_histogram"] = histogram_json(q_histogram(f, op->serial ? Execution::serial : Execution::parallel));
      if (op->isotropic > 0) {
        o.payload["isotropic_order"] = op->isotropic;
        o.payload["isotropic_subgroups"] = enumerate_isotropic_subgroups(f, op->isotropic).size();
      }
      return o;
    };
  });
}

void add_glue_command(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string base, vectors, stock;
  };
  auto op = std::make_shared<Opts>();
  auto* g = app.add_subcommand("glue", "overlattice generated by a lattice and glue vectors");
  g->add_option("--base", op->base, "base lattice JSON file");
  g->add_option("--vectors", op->vectors, "JSON file: array of glue vectors (rationals as \"p/q\")");
  g->add_option("--stock", op->stock, "built-in glue: u2n (U(2)^3+N) or nn (N+N)")
      ->check(CLI::IsMember({"u2n", "nn"}));
  g->callback([&ctx, op] {
    ctx.action = [op] {
      GlueData data;
      if (!op->stock.empty()) {
        if (!op->base.empty() || !op->vectors.empty())
          throw Error("bad_argument", "--stock excludes --base and --vectors");
        data = op->stock == "u2n" ? u2_cubed_nikulin_glue() : nikulin_pair_glue();
      } else {
        if (op->base.empty() || op->vectors.empty()) throw Error("bad_argument", "need --base and --vectors");
        data.base = lattice_from_json(parse_json(read_source(op->base)));
        Json vj = parse_json(read_source(op->vectors));
        if (vj.is_object() && vj.contains("vectors")) vj = vj.at("vectors");
        if (!vj.is_array()) throw Error("malformed_json", "glue vectors must be an array");
        for (const auto& v : vj) {
          RatVector x = rat_vector_from_json(v);
          if (x.size() != data.base.rank()) throw Error("shape", "glue vector length does not match the base rank");
          data.generators.push_back(std::move(x));
        }
      }
      Overlattice ov = glue(data);
      Output o;
      o.payload["lattice"] = lattice_to_json(ov.lattice);
      o.payload["basis"] = columns_json(ov.basis);
      Json ver;
      ver["even"] = ov.lattice.is_even();
      ver["det"] = to_json(ov.lattice.determinant());
      ver["signature"] = signature_json(signature(ov.lattice));
      ver["index"] = to_json(ov.index);
      o.payload["verification"] = ver;
      return o;
    };
  });
}

void add_k3_commands(CLI::App& app, Context& ctx) {
  auto* k3 = app.add_subcommand("k3", "quotient maps between X~ and Y");
  k3->require_subcommand(1);

  auto check = std::make_shared<bool>(false);
  auto* maps = k3->add_subcommand("maps", "verify the push/pull identities and the (s,t,r) decomposition");
  maps->add_flag("--check", *check, "run all identity checks");
  maps->callback([&ctx, check] {
    ctx.action = [check] {
      Output o;
      const CohomologyModel& m = cohomology_model();
      o.payload["x_tilde_rank"] = m.x_tilde.rank();
      o.payload["y_rank"] = m.y_full.rank();
      if (*check) {
        AdjunctionReport r = verify_adjunction();
        o.payload["push_iota"] = r.push_iota;
        o.payload["adjunction"] = r.adjunction;
        o.payload["pull_scales_form"] = r.pull_scales_form;
        o.payload["push_pull"] = r.push_pull;
        o.payload["pull_nodes"] = r.pull_nodes;
        o.payload["y_unimodular"] = r.y_full_unimodular;
        o.payload["str"] = Json{{"s", r.str.s}, {"t", r.str.t}, {"r", r.str.r}};
        o.payload["ok"] = r.ok();
        if (!r.ok()) o.fail_code = "check_failed";
      }
      return o;
    };
  });

  auto push_vec = std::make_shared<std::string>();
  auto* push = k3->add_subcommand("push", "pi_*: rank-30 X~ vector to Y");
  push->add_option("--vector", *push_vec, "JSON array of 30 integers")->required();
  push->callback([&ctx, push_vec] {
    ctx.action = [push_vec] {
      IntVector v = int_vector_from_json(parse_json(*push_vec));
      Output o;
      o.payload["input"] = to_json(v);
      o.payload["image"] = to_json(pi_push(v));
      return o;
    };
  });

  auto pull_vec = std::make_shared<std::string>();
  auto* pull = k3->add_subcommand("pull", "pi^*: rank-22 Y vector (glued lattice + E8(-1)) to X~");
  pull->add_option("--vector", *pull_vec, "JSON array of 22 rationals")->required();
  pull->callback([&ctx, pull_vec] {
    ctx.action = [pull_vec] {
      RatVector w = rat_vector_from_json(parse_json(*pull_vec));
      Output o;
      o.payload["input"] = to_json(w);
      o.payload["image"] = to_json(pi_pull_extended(w));
      return o;
    };
  });
}

void add_ns_commands(CLI::App& app, Context& ctx) {
  auto* ns = app.add_subcommand("ns", "Neron-Severi lattices of K3 surfaces with a Nikulin involution");
  ns->require_subcommand(1);

  auto l2 = std::make_shared<long>(0);
  auto* classify = ns->add_subcommand("classify", "families <2d>+E8(-2) and their index-2 overlattices");
  classify->add_option("--L2", *l2, "the self-intersection 2d")->required();
  classify->callback([&ctx, l2] {
    ctx.action = [l2] {
      Output o;
      o.payload["L2"] = *l2;
      Json fams = Json::array();
      for (const auto& f : classify_ns(*l2)) fams.push_back(family_json(f));
      o.payload["families"] = fams;
      return o;
    };
  });

  auto example = std::make_shared<std::string>();
  auto* moduli = ns->add_subcommand("moduli", "moduli dimension counts (all examples if none given)");
  moduli->add_option("--example", *example, "M2, M6, M4, M4tilde, M8 or M8tilde");
  moduli->callback([&ctx, example] {
    ctx.action = [example] {
      Output o;
      if (!example->empty()) {
        o.payload = moduli_json(moduli_dimension(*example));
      } else {
        o.payload = Json::array();
        for (const auto& e : moduli_examples()) o.payload.push_back(moduli_json(moduli_dimension(e)));
      }
      return o;
    };
  });

  auto rank_t = std::make_shared<long>(0);
  auto* obs = ns->add_subcommand("obstruction", "determinant square class of NS versus its quotient");
  obs->add_option("--rankT", *rank_t, "rank of the transcendental lattice (1..13)")->required();
  obs->callback([&ctx, rank_t] {
    ctx.action = [rank_t] {
      SquareClassReport r = det_square_class_obstruction(*rank_t);
      Output o;
      o.payload["rank_T"] = r.rank_t;
      o.payload["d"] = r.d;
      Rational ratio(r.ratio_numerator, r.ratio_denominator);
      ratio.canonicalize();
      o.payload["det_ratio"] = to_json(ratio);
      o.payload["is_square"] = r.is_square;
      return o;
    };
  });

  struct EigenOpts {
    long l2 = 0;
    std::string variant = "plain";
  };
  auto eo = std::make_shared<EigenOpts>();
  auto* eig = ns->add_subcommand("eigen", "eigenspace dimensions of the involution on H^0(L)");
  eig->add_option("--L2", eo->l2, "the self-intersection 2d")->required();
  eig->add_option("--variant", eo->variant, "plain or tilde")->check(CLI::IsMember({"plain", "tilde"}));
  eig->callback([&ctx, eo] {
    ctx.action = [eo] {
      EigenspaceDimensions e = eigenspace_dimensions(eo->l2, parse_variant(eo->variant));
      Output o;
      o.payload["L2"] = eo->l2;
      o.payload["variant"] = eo->variant;
      o.payload["h_plus"] = e.h_plus;
      o.payload["h_minus"] = e.h_minus;
      o.payload["fixed_points"] = Json::array({e.fixed_plus, e.fixed_minus});
      return o;
    };
  });

  auto mn_n = std::make_shared<long>(2);
  auto* mn = ns->add_subcommand("mn", "NS = <2n>+E8(-1)^2 and its transcendental lattice <-2n>+U^2");
  mn->add_option("--n", *mn_n, "n >= 1");
  mn->callback([&ctx, mn_n] {
    ctx.action = [mn_n] {
      MorrisonNikulinReport r = morrison_nikulin_lattices(*mn_n);
      Output o;
      o.payload["n"] = r.n;
      o.payload["ns"] = fingerprint_json(r.ns);
      o.payload["t"] = fingerprint_json(r.t);
      o.payload["opposite_q"] = r.opposite_q;
      o.payload["complement_matches"] = r.complement_matches;
      o.payload["ok"] = r.ok();
      if (!r.ok()) o.fail_code = "check_failed";
      return o;
    };
  });
}

void add_ell_commands(CLI::App& app, Context& ctx) {
  auto* ell = app.add_subcommand("ell", "elliptic fibrations y^2 = x(x^2 + a x + b)");
  ell->require_subcommand(1);

  struct AB {
    std::string a, b;
    void attach(CLI::App* c) {
      c->add_option("--a", a, "coefficients of a, low degree first, e.g. \"1,0,0,0,1\"")->required();
      c->add_option("--b", b, "coefficients of b, e.g. \"1\"")->required();
    }
    WeierstrassFibration model() const { return {parse_poly_arg(a, "--a"), parse_poly_arg(b, "--b")}; }
  };

  auto fab = std::make_shared<AB>();
  auto* fibers = ell->add_subcommand("fibers", "singular fibers from the discriminant");
  fab->attach(fibers);
  fibers->callback([&ctx, fab] {
    ctx.action = [fab] {
      WeierstrassFibration f = fab->model();
      FiberReport r = fiber_configuration(f);
      Output o;
      o.payload["model"] = model_json(f);
      o.payload["fibers"] = fibers_json(r);
      if (!r.all_multiplicative) o.diagnostics.push_back("additive fibers are detected but not classified");
      return o;
    };
  });

  auto qab = std::make_shared<AB>();
  auto* quot = ell->add_subcommand("quotient", "2-isogenous model (-2a, a^2-4b) and its fibers");
  qab->attach(quot);
  quot->callback([&ctx, qab] {
    ctx.action = [qab] {
      WeierstrassFibration g = two_isogeny_quotient(qab->model());
      Output o;
      o.payload["model"] = model_json(g);
      o.payload["fibers"] = fibers_json(fiber_configuration(g));
      return o;
    };
  });

  struct STOpts {
    std::string fibers;
    long torsion = 1;
    long mw = 0;
  };
  auto so = std::make_shared<STOpts>();
  auto* st = ell->add_subcommand("shioda-tate", "Picard rank and NS discriminant from fiber data");
  st->add_option("--fibers", so->fibers, "e.g. I2:8,I1:8")->required();
  st->add_option("--torsion", so->torsion, "order of the Mordell-Weil torsion");
  st->add_option("--mw-rank", so->mw, "Mordell-Weil rank (only 0 is supported)");
  st->callback([&ctx, so] {
    ctx.action = [so] {
      ShiodaTate s = shioda_tate(parse_fiber_list(so->fibers), so->mw, so->torsion);
      Output o;
      o.payload["picard_rank"] = s.picard_rank;
      o.payload["ns_discriminant"] = to_json(s.ns_discriminant);
      return o;
    };
  });

  auto family = std::make_shared<std::string>("generic");
  auto* rnd = ell->add_subcommand("random", "seeded random model of a family and its fibers");
  rnd->add_option("--family", *family, "generic or i16")->check(CLI::IsMember({"generic", "i16"}));
  rnd->callback([&ctx, family] {
    ctx.action = [&ctx, family] {
      WeierstrassFibration f = *family == "generic" ? random_generic_fibration(ctx.seed) : random_i16_fibration(ctx.seed);
      Output o;
      o.payload["seed"] = ctx.seed;
      o.payload["family"] = *family;
      o.payload["model"] = model_json(f);
      o.payload["fibers"] = fibers_json(fiber_configuration(f));
      o.payload["quotient_fibers"] = fibers_json(fiber_configuration(two_isogeny_quotient(f)));
      return o;
    };
  });

  auto tab = std::make_shared<AB>();
  auto* tors = ell->add_subcommand("torsion", "translation by the 2-torsion section in U+N");
  tab->attach(tors);
  tors->callback([&ctx, tab] {
    ctx.action = [tab] {
      TorsionTranslationReport r = torsion_section_translation_data(tab->model());
      Output o;
      o.payload["tau"] = to_json(r.tau);
      o.payload["tau_sq"] = to_json(r.tau_sq);
      o.payload["tau_sigma"] = to_json(r.tau_sigma);
      o.payload["tau_f"] = to_json(r.tau_f);
      o.payload["tau_nodes"] = to_json(IntVector(r.tau_nodes));
      o.payload["det"] = to_json(r.det);
      o.payload["ns_matches_u_plus_n"] = r.ns_matches_u_plus_n;
      return o;
    };
  });

  auto* i16 = ell->add_subcommand("i16", "component permutation of the I_16 fiber and the two E8(-1)");
  i16->callback([&ctx] {
    ctx.action = [] {
      I16Report r = i16_component_permutation();
      Output o;
      o.payload["permutation"] = r.permutation;
      o.payload["first_chain"] = r.first_chain;
      o.payload["second_chain"] = r.second_chain;
      o.payload["involution"] = r.involution;
      o.payload["swaps_chains"] = r.swaps_chains;
      o.payload["chains_are_a7"] = r.chains_are_a7;
      o.payload["e8_pair_ok"] = r.e8_pair_ok;
      return o;
    };
  });

  auto* wm = ell->add_subcommand("moduli", "parameter count of the Weierstrass family");
  wm->callback([&ctx] {
    ctx.action = [] {
      WeierstrassModuli m = weierstrass_moduli_count();
      Output o;
      o.payload["coefficients"] = m.coefficients;
      o.payload["scaling"] = m.scaling;
      o.payload["pgl2"] = m.pgl2;
      o.payload["value"] = m.value;
      o.payload["formula"] = std::to_string(m.coefficients) + "-" + std::to_string(m.scaling) + "-" +
                             std::to_string(m.pgl2) + "=" + std::to_string(m.value);
      return o;
    };
  });
}

void add_verify_command(CLI::App& app, Context& ctx) {
  auto only = std::make_shared<int>(0);
  auto* v = app.add_subcommand("verify-paper", "run every acceptance check");
  v->alias("verify");
  v->add_option("--criterion", *only, "run a single criterion (1..11)");
  v->callback([&ctx, only] {
    ctx.action = [&ctx, only] {
      std::vector<CriterionResult> results =
          *only ? std::vector<CriterionResult>{run_criterion(*only, ctx.seed)} : run_acceptance(ctx.seed);
      Output o;
      Json list = Json::array();
      std::size_t passed = 0;
      std::ostringstream text;
      for (const auto& r : results) {
        passed += r.passed;
        list.push_back({{"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"seconds", r.seconds},
                        {"limit_seconds", r.limit_seconds},
                        {"detail", r.detail}});
        text << format_line(r) << "\n";
      }
      text << passed << "/" << results.size() << " passed\n";
      o.payload["seed"] = ctx.seed;
      o.payload["criteria"] = list;
      o.payload["passed"] = passed;
      o.payload["total"] = results.size();
      o.text = text.str();
      if (passed != results.size()) o.fail_code = "acceptance_failed";
      return o;
    };
  });
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

CommandResult run(const std::vector<std::string>& argv) {
  CommandResult result;
  Context ctx;
  CLI::App app{"k3tool: lattices, discriminant forms and elliptic fibrations of K3 surfaces", "k3tool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.json, "machine-readable JSON output");
  app.add_option("--seed", ctx.seed, "seed for randomized checks");
  add_lattice_commands(app, ctx);
  add_disc_command(app, ctx);
  add_glue_command(app, ctx);
  add_k3_commands(app, ctx);
  add_ns_commands(app, ctx);
  add_ell_commands(app, ctx);
  add_verify_command(app, ctx);

  std::vector<std::string> args{"k3tool"};
  args.insert(args.end(), argv.begin(), argv.end());
  std::vector<const char*> ptrs;
  for (const auto& a : args) ptrs.push_back(a.c_str());

  auto fail = [&](int code, const std::string& error_code, const std::string& message) {
    result.status = Status::error;
    result.exit_code = code;
    result.error_code = error_code;
    result.diagnostics.push_back(message);
  };

  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::CallForHelp&) {
    result.text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    fail(2, "usage", e.what());
    result.json = ctx.json;
  }
  result.json = ctx.json;

  if (result.status == Status::ok) {
    Output out;
    try {
      out = ctx.action();
      result.payload = out.payload;
      result.diagnostics = out.diagnostics;
      if (!out.fail_code.empty()) fail(1, out.fail_code, "check failed");
    } catch (const Error& e) {
      fail(e.code() == "malformed_json" ? 3 : 1, e.code(), e.what());
    } catch (const std::exception& e) {
      fail(1, "internal", e.what());
    }
    if (!result.json && !out.text.empty()) result.text = out.text;
  }

  if (result.json) {
    if (result.status == Status::ok) {
      result.text = result.payload.dump(2) + "\n";
    } else {
      Json err;
      err["status"] = "error";
      err["code"] = result.error_code;
      err["diagnostics"] = result.diagnostics;
      if (!result.payload.is_null()) err["payload"] = result.payload;
      result.text = err.dump(2) + "\n";
    }
  } else if (result.text.empty() && !result.payload.is_null()) {
    result.text = render_text(result.payload);
  }
  return result;
}

}  // namespace k3lat
