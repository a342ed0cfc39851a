#include "hopf/cli/commands.hpp"

#include <fmt/format.h>

#include <ostream>

#include "CLI11.hpp"
#include "hopf/f2_linalg.hpp"
#include "hopf/hopf_degree.hpp"
#include "hopf/property_suites.hpp"
#include "hopf/triangulations.hpp"

namespace hopf::cli {

namespace {

std::string superscript(int v) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = v < 0 ? "⁻" : "";
  for (char c : std::to_string(v < 0 ? -v : v)) out += digits[c - '0'];
  return out;
}

std::string vector_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string class_string(const QClass& x, const std::string& symbol) {
  std::string s;
  for (const auto& [comp, v] : x.components) {
    if (is_zero(v)) continue;
    s += fmt::format("{}{}_{} = {}", s.empty() ? "" : ", ", symbol, comp, vector_string(v));
  }
  return s.empty() ? "0" : s;
}

Json class_json(const QClass& x) {
  Json j = Json::object();
  for (const auto& [comp, v] : x.components) j[std::to_string(comp)] = vector_to_json(v);
  return j;
}

std::string range_string(int lo, int hi) { return fmt::format("[{},{}]", bound_to_string(lo), bound_to_string(hi)); }

int parse_bound(const std::string& text, const std::string& what) {
  if (text == "inf" || text == "+inf" || text == "infinity") return kPlusInfinity;
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(fmt::format("{}: expected an integer or \"inf\", got \"{}\"", what, text));
}

Integer parse_integer(const std::string& text, const std::string& what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw InputError(fmt::format("{}: expected an integer, got \"{}\"", what, text));
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const Integer v = parse_integer(text, what);
  if (!v.fits_sint_p()) throw InputError(fmt::format("{}: {} is out of range", what, text));
  return static_cast<int>(v.get_si());
}

Coefficients parse_ring(const std::string& ring) {
  if (ring == "Z") return Coefficients::Integers;
  if (ring == "F2") return Coefficients::F2;
  throw InputError(fmt::format("--ring: expected Z or F2, got \"{}\"", ring));
}

struct LoadedComplex {
  ChainComplex complex;
  std::string schema;
  Json echo;
};

LoadedComplex load_complex(const std::string& file, const std::string& ring) {
  const Json j = read_json_file(file);
  if (is_triangulation(j)) {
    const SimplicialComplex k = triangulation_from_json(j, file);
    return {k.chain_complex(parse_ring(ring)), "triangulation", triangulation_to_json(k)};
  }
  const ChainComplex c = complex_from_json(j, file);
  return {c, "complex", complex_to_json(c)};
}

}  // namespace

// ---------------------------------------------------------------------------

Report cmd_homology(const std::string& file, std::optional<int> degree, const std::string& ring) {
  const LoadedComplex in = load_complex(file, ring);
  Report rep(fmt::format("homology {}", file));
  rep.data()[in.schema] = in.echo;
  const ChainComplex& c = in.complex;
  Json groups = Json::object();
  if (c.is_empty()) {
    rep.line("H_* = 0 (empty complex)");
  } else {
    std::vector<std::string> parts;
    const int lo = degree ? *degree : c.lo();
    const int hi = degree ? *degree : c.hi();
    for (int r = lo; r <= hi; ++r) {
      const std::string g = c.homology(r).to_string();
      parts.push_back(fmt::format("H_{} = {}", r, g));
      groups[std::to_string(r)] = g;
    }
    rep.line(fmt::format("{}", fmt::join(parts, ", ")));
  }
  rep.data()["homology"] = groups;
  rep.verify("d² = 0", true);
  return rep;
}

Report cmd_qgroup(const std::string& file, const std::string& kind, int n, int i, const std::string& j,
                  const std::optional<std::string>& k) {
  const LoadedComplex in = load_complex(file, "Z");
  const ChainComplex& c = in.complex;
  Report rep(fmt::format("qgroup {} --kind {} --n {}", file, kind, n));
  rep.data()[in.schema] = in.echo;
  QGroup g;
  std::string name;
  if (kind == "sym" || kind == "quad") {
    int lo = i, hi = parse_bound(j, "--j");
    if (k) {
      const int kk = parse_bound(*k, "--k");
      if (kk < 1) throw InputError("--k must be at least 1");
      lo = 0;
      hi = is_infinite(kk) ? kPlusInfinity : kk - 1;
    }
    if (lo > hi) throw InputError(fmt::format("empty range [{},{}]", lo, bound_to_string(hi)));
    if (kind == "sym") {
      g = symmetric_Q(c, n, lo, hi);
      name = fmt::format("Q^{}_{}(C)", n, range_string(lo, hi));
    } else {
      g = quadratic_Q(c, n, lo, hi);
      name = fmt::format("Q_{}^{}(C)", n, range_string(lo, hi));
    }
  } else if (kind == "hyper") {
    const int kk = parse_bound(k.value_or("inf"), "--k");
    if (kk < 1) throw InputError("--k must be at least 1");
    g = hyperquadratic_Q(c, n, kk);
    name = is_infinite(kk) ? fmt::format("Q̂^{}(C)", n) : fmt::format("Q̂^{}_{}(C)", n, range_string(-kk, kk - 1));
  } else {
    throw InputError(fmt::format("--kind: expected sym, quad or hyper, got \"{}\"", kind));
  }
  const std::string group = g.group.to_string();
  rep.line(fmt::format("{} = {}", name, group));
  rep.data()["group"] = group;
  rep.data()["free_rank"] = g.group.free_rank();
  Json torsion = Json::array();
  for (const Integer& t : g.group.torsion()) torsion.push_back(integer_to_json(t));
  rep.data()["torsion"] = torsion;
  rep.value("effective range", g.effective_range, g.effective_range);
  bool cycles = true;
  for (const QClass& x : g.generators) cycles = cycles && x.is_cycle();
  rep.verify("generators are cycles", cycles);
  return rep;
}

Report cmd_sq(const std::string& file, int i, int degree, const std::optional<std::string>& cocycle, int generator) {
  const Json j = read_json_file(file);
  if (!is_triangulation(j)) throw InputError(fmt::format("{}: sq needs a triangulation document", file));
  const SimplicialComplex k = triangulation_from_json(j, file);
  Report rep(fmt::format("sq {} --i {} --degree {}", file, i, degree));
  rep.data()["triangulation"] = triangulation_to_json(k);
  if (i < 0 || degree < 0 || degree > k.dimension())
    throw InputError(fmt::format("need 0 <= i and 0 <= degree <= {}", k.dimension()));
  Cochain x;
  if (cocycle) {
    x = reduce_mod2(vector_from_json(parse_json(*cocycle, "--cocycle"), "--cocycle"));
    if (x.size() != k.count(degree))
      throw InputError(fmt::format("--cocycle: expected {} values, one per {}-simplex", k.count(degree), degree));
  } else {
    const std::vector<Cochain> basis = cohomology_basis(k, degree, Coefficients::F2);
    if (generator < 0 || static_cast<std::size_t>(generator) >= basis.size())
      throw InputError(fmt::format("--generator: H^{}(K; F2) has {} generators", degree, basis.size()));
    x = basis[generator];
  }
  if (!is_cocycle(k, degree, x, Coefficients::F2))
    throw PreconditionError(fmt::format("the given {}-cochain is not a mod-2 cocycle", degree));
  rep.value("x", vector_string(x), vector_to_json(x));
  const int top = i + degree;
  const IsovariantStructure phi(k, std::max(1, degree - i + 1));
  const Cochain sq = steenrod_square(phi, i, degree, x);
  const bool nonzero = top <= k.dimension() && !cohomologous(k, top, sq, Cochain(k.count(top)), Coefficients::F2);
  std::string text = fmt::format("{}: Sq{}x", nonzero ? "nonzero" : "zero", superscript(i));
  if (i == degree) {
    const Cochain square = reduce_mod2(cup_product(phi, degree, x, degree, x, Coefficients::F2));
    const bool agrees = top > k.dimension() || cohomologous(k, top, sq, square, Coefficients::F2);
    rep.verify(fmt::format("Sq{}x = x²", superscript(i)), agrees);
    text += " = x²";
  } else if (i == 0) {
    rep.verify("Sq⁰x = x", cohomologous(k, degree, sq, x, Coefficients::F2));
    text += " = x";
  } else if (i > degree) {
    text += " = 0 (above the degree)";
  }
  rep.line(text);
  rep.data()["nonzero"] = nonzero;
  rep.data()["square"] = vector_to_json(sq);
  if (top <= k.dimension()) rep.verify("Sq^i x is a cocycle", is_cocycle(k, top, sq, Coefficients::F2));
  return rep;
}

Report cmd_symmetric(const std::string& file, std::optional<int> order, const std::string& ring) {
  const Json j = read_json_file(file);
  if (!is_triangulation(j)) throw InputError(fmt::format("{}: symmetric needs a triangulation document", file));
  const SimplicialComplex k = triangulation_from_json(j, file);
  const Coefficients cf = parse_ring(ring);
  const int n = k.dimension();
  const int kk = order.value_or(n + 1);
  if (kk < 1) throw InputError("--k must be at least 1");
  Report rep(fmt::format("symmetric {} --k {} --ring {}", file, kk, ring));
  rep.data()["triangulation"] = triangulation_to_json(k);
  const IntVector fundamental = k.fundamental_cycle(cf);
  const SymmetricPoincare sp = symmetric_poincare(k, fundamental, n, cf, kk);
  rep.value("dimension", std::to_string(n), n);
  rep.value("euler characteristic", std::to_string(k.euler_characteristic()), k.euler_characteristic());
  if (n % 2 == 1) {
    const int semi = semicharacteristic(k, n);
    rep.value("semicharacteristic", std::to_string(semi), semi);
  }
  std::vector<std::string> sizes;
  for (const auto& [s, v] : sp.phi.components) {
    std::size_t support = 0;
    for (const Integer& x : v) support += x != 0 ? 1 : 0;
    sizes.push_back(fmt::format("φ_{}: {} terms", s, support));
  }
  rep.line(fmt::format("φ([X]) ∈ Q^{}_{}(C): {}", n, range_string(0, kk - 1), fmt::join(sizes, ", ")));
  rep.data()["phi"] = class_json(sp.phi);
  rep.verify("φ([X]) is a cycle", sp.phi.is_cycle());
  const bool duality = sp.duality_is_quasi_isomorphism();
  rep.verify("φ_0 ∩ [X] is a quasi-isomorphism", duality);
  rep.data()["poincare_duality"] = duality;
  return rep;
}

Report cmd_quadratic(const std::string& file, std::optional<int> kmax) {
  const QuadraticInput in = quadratic_from_json(read_json_file(file), file);
  Report rep(fmt::format("quadratic {}{}", file, kmax ? fmt::format(" --kmax {}", *kmax) : ""));
  const SymmetricClass theta = in.theta ? *in.theta : obstruction_theta(*in.problem);
  const RefinementResult r = refine(theta, kmax.value_or(0));
  rep.value("θ", class_string(theta, "θ"), class_json(theta));
  rep.value("status", r.status(), r.status());
  rep.data()["hyperquadratic_obstruction"] = r.hyperquadratic_obstruction;
  if (r.psi) {
    rep.value("minimal k", std::to_string(r.k), r.k);
    rep.value("ψ", class_string(*r.psi, "ψ"), class_json(*r.psi));
    const QGroup g = compute_Q(r.psi->complex, r.psi->n);
    const IntVector coords = class_coordinates(g, *r.psi);
    rep.value(fmt::format("[ψ] ∈ Q_{}^{}", r.psi->n, range_string(0, r.k - 1)),
              fmt::format("{} in {}", vector_string(coords), g.group.to_string()), vector_to_json(coords));
    rep.verify("d δ = θ (certificate)", r.certificate->verify());
    rep.verify("ψ is a quadratic cycle", r.psi->is_cycle());
    // (1 + T) psi - theta is a boundary in the symmetric complex of theta.
    const QClass sym = symmetrization(*r.psi, theta.complex);
    const IntVector diff = subtract(sym.packed(), theta.packed());
    const bool boundary =
        theta.complex->coefficients() == Coefficients::F2
            ? F2Matrix::from_int(theta.complex->differential(theta.n + 1)).solve(to_bits(diff)).has_value()
            : solve_linear(theta.complex->differential(theta.n + 1), diff).has_value();
    rep.verify("(1 + T)ψ ≃ θ", boundary);
  }
  return rep;
}

Report cmd_witt(const std::string& file, int n) {
  const QuadraticForm form = form_from_json(read_json_file(file), file);
  Report rep(fmt::format("witt {} --n {}", file, n));
  rep.data()["form"] = form_to_json(form);
  const int residue = ((n % 4) + 4) % 4;
  const bool nonsingular = form.is_nonsingular();
  rep.value("rank", std::to_string(form.rank()), form.rank());
  rep.value("nonsingular", nonsingular ? "yes" : "no", nonsingular);
  std::string summary;
  if (form.ring() == Coefficients::Integers && form.epsilon() == 1) {
    const long sig = signature(form.lambda());
    rep.data()["signature"] = sig;
    rep.data()["even"] = form.is_even();
    summary = fmt::format("signature {}", sig);
  }
  if (residue == 2 || (residue == 0 && (form.ring() == Coefficients::F2 || form.epsilon() == -1))) {
    if (form.has_mu() && nonsingular && (form.ring() == Coefficients::F2 || form.epsilon() == -1)) {
      const int a = arf(form);
      rep.data()["arf"] = a;
      summary += fmt::format("{}Arf {}", summary.empty() ? "" : "; ", a);
    }
  }
  if (residue == 0 && form.ring() == Coefficients::Integers && form.epsilon() == 1 && nonsingular && !form.is_even()) {
    summary += "; no L-class (the form is not even)";
    rep.data()["obstruction"] = nullptr;
  } else {
    const LClass l = surgery_obstruction(form, n);
    summary += fmt::format("{}σ* = {}", summary.empty() ? "" : "; ", l.to_string());
    rep.data()["obstruction"] = Json{{"n", n}, {"group", l.group}, {"value", integer_to_json(l.value)}};
  }
  rep.line(summary);
  if (form.rank() <= 6 && form.has_mu() && nonsingular && (form.ring() == Coefficients::F2 || form.epsilon() == -1))
    rep.verify("Arf: democratic count = symplectic reduction", arf(form) == arf_symplectic(form));
  return rep;
}

Report cmd_wallmu(const std::string& file) {
  const WallInput in = wallmu_from_json(read_json_file(file), file);
  Report rep(fmt::format("wallmu {}", file));
  rep.data()["wallmu"] = wallmu_to_json(in);
  const WallClass mu = wall_mu_from_double_points(in.group, in.points, in.m);
  rep.value("μ", mu.to_string(), vector_to_json(mu.lift().coefficients()));
  const std::string quotient = wall_quotient(*in.group, in.m).to_string();
  rep.value(fmt::format("Z[π]/{{x {} x̄}}", in.m % 2 == 0 ? "-" : "+"), quotient, quotient);
  const IntMatrix rel = wall_relation_matrix(*in.group, in.m);
  bool kills = true;
  for (std::size_t a = 0; a < in.group->order(); ++a) {
    GroupRingElement x(in.group);
    for (std::size_t i = 0; i < in.group->order(); ++i) x[static_cast<int>(i)] = rel(i, a);
    kills = kills && wall_mu_reduce(x, in.m).is_zero();
  }
  rep.verify("relation generators reduce to 0", kills);
  const IntVector diff = subtract(wall_mu_reduce(mu.lift(), in.m).lift().coefficients(), mu.lift().coefficients());
  rep.verify("normal form is idempotent", is_zero(diff));
  return rep;
}

Report cmd_hopf(const std::vector<std::string>& args) {
  if (args.empty()) throw InputError("hopf: expected degree, bidegree, compose, smash, curvint or kunneth");
  Report rep("hopf " + fmt::format("{}", fmt::join(args, " ")));
  const std::string& what = args[0];
  auto need = [&](std::size_t count, const char* usage) {
    if (args.size() != count + 1) throw InputError(fmt::format("hopf {}: usage: hopf {}", what, usage));
  };
  if (what == "degree") {
    need(1, "degree D");
    const Integer h = hopf_of_degree(parse_integer(args[1], "D"));
    rep.value("h", h.get_str(), integer_to_json(h));
  } else if (what == "bidegree") {
    need(2, "bidegree DEG_F DEG_G");
    const BiDegree b = bidegree_of(parse_integer(args[1], "DEG_F"), parse_integer(args[2], "DEG_G"));
    rep.value("bi-degree", b.to_string(), Json::array({integer_to_json(b.a), integer_to_json(b.b)}));
    rep.verify("2a + b = deg F", bidegree_forget(b) == parse_integer(args[1], "DEG_F"));
  } else if (what == "compose") {
    need(4, "compose DEG_F1 DEG_G1 DEG_F2 DEG_G2");
    const BiDegree p = bidegree_of(parse_integer(args[1], "DEG_F1"), parse_integer(args[2], "DEG_G1"));
    const BiDegree q = bidegree_of(parse_integer(args[3], "DEG_F2"), parse_integer(args[4], "DEG_G2"));
    const BiDegree c = bidegree_compose(p, q);
    rep.value("bi-degree", c.to_string(), Json::array({integer_to_json(c.a), integer_to_json(c.b)}));
    rep.verify("degrees multiply", bidegree_forget(c) == bidegree_forget(p) * bidegree_forget(q) && c.b == p.b * q.b);
  } else if (what == "smash") {
    need(2, "smash DEG_F DEG_G");
    const BiDegree c = bidegree_smash(bidegree_of(parse_integer(args[1], "DEG_F"), 1), parse_integer(args[2], "DEG_G"));
    rep.value("bi-degree", c.to_string(), Json::array({integer_to_json(c.a), integer_to_json(c.b)}));
  } else if (what == "curvint") {
    if (args.size() < 3) throw InputError("hopf curvint: usage: hopf curvint M CHI (m even) or M SEMICHAR HOPF (m odd)");
    const int m = parse_int(args[1], "M");
    QValue v;
    if (m % 2 == 0) {
      need(2, "curvint M CHI");
      v = curvatura_integra_even(m, parse_integer(args[2], "CHI"));
    } else {
      need(3, "curvint M SEMICHAR HOPF");
      v = curvatura_integra_odd(m, parse_integer(args[2], "SEMICHAR"), parse_integer(args[3], "HOPF"));
    }
    rep.value("c_*[M]", v.to_string(), integer_to_json(v.value()));
  } else if (what == "kunneth") {
    need(1, "kunneth FILE");
    const Json j = read_json_file(args[1]);
    if (!is_triangulation(j)) throw InputError(fmt::format("{}: kunneth needs a triangulation document", args[1]));
    const SimplicialComplex k = triangulation_from_json(j, args[1]);
    const KunnethMu r = kunneth_mu(k, k.dimension());
    rep.data()["triangulation"] = triangulation_to_json(k);
    rep.value("μ([N]*)", fmt::format("{} ∈ Z/2", r.mu), r.mu);
    rep.value("χ_1/2", fmt::format("{} ∈ Z/2", r.semicharacteristic), r.semicharacteristic);
    rep.verify("μ([N]*) = χ_1/2(N)", r.passed(), r.detail);
  } else {
    throw InputError(fmt::format("hopf: unknown calculation \"{}\"", what));
  }
  return rep;
}

Report cmd_check(const std::string& suite, unsigned seed, const std::optional<std::string>& golden) {
  SuiteResult result = run_property_suite(suite, seed);
  Report rep(fmt::format("check {} --seed {}{}", suite, seed, golden ? " --golden " + *golden : ""));
  if (golden) {
    const Json j = read_json_file(*golden);
    if (!j.is_object()) throw InputError(fmt::format("{}: expected an object of label -> value", *golden));
    std::map<std::string, std::string> expected;
    for (const auto& [label, value] : j.items()) {
      if (!value.is_string()) throw InputError(fmt::format("{}: \"{}\": expected a string value", *golden, label));
      expected.emplace(label, value.get<std::string>());
    }
    apply_golden(result, expected);
  }
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
  Json values = Json::object();
  for (const PropertyCheck& c : result.checks) {
    auto& [total, failed] = per_suite[c.label.substr(0, c.label.find('/'))];
    ++total;
    failed += c.passed ? 0 : 1;
    values[c.label] = c.value;
    rep.verify(c.label, c.passed, c.detail);
  }
  for (const auto& [name, counts] : per_suite)
    rep.line(fmt::format("{}: {} checks, {} failed", name, counts.first, counts.second));
  rep.data()["values"] = values;
  rep.set_compact(true);
  return rep;
}

// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain-level Hopf invariant and surgery calculator", "hopfcalc"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string file, ring = "Z", kind = "sym", j = "inf", suite, cocycle, golden;
  int n = 0, i = 0, degree = 0, generator = 0, order = 0, kmax = 0;
  std::string k;
  unsigned seed = 1;
  std::vector<std::string> hopf_args;

  auto* homology = app.add_subcommand("homology", "homology of a complex or triangulation");
  homology->add_option("file", file)->required();
  auto* homology_degree = homology->add_option("--degree", degree);
  homology->add_option("--ring", ring, "Z or F2 (triangulations)");

  auto* qgroup = app.add_subcommand("qgroup", "Q-groups of a chain complex");
  qgroup->add_option("file", file)->required();
  qgroup->add_option("--kind", kind, "sym, quad or hyper");
  qgroup->add_option("--n", n)->required();
  qgroup->add_option("--i", i);
  qgroup->add_option("--j", j);
  auto* qgroup_k = qgroup->add_option("--k", k);

  auto* sq = app.add_subcommand("sq", "Steenrod squares of a mod-2 cohomology class");
  sq->add_option("file", file)->required();
  sq->add_option("--i", i)->required();
  sq->add_option("--degree", degree)->required();
  auto* sq_cocycle = sq->add_option("--cocycle", cocycle, "JSON array, one value per simplex");
  sq->add_option("--generator", generator, "index into the computed basis of H^degree");

  auto* symmetric = app.add_subcommand("symmetric", "symmetric Poincare structure of a triangulated manifold");
  symmetric->add_option("file", file)->required();
  auto* symmetric_k = symmetric->add_option("--k", order, "number of components phi_0..phi_{k-1}");
  symmetric->add_option("--ring", ring, "Z or F2");

  auto* quadratic = app.add_subcommand("quadratic", "quadratic refinement of a symmetric obstruction");
  quadratic->add_option("file", file)->required();
  auto* quadratic_kmax = quadratic->add_option("--kmax", kmax, "largest stabilization order tried");

  auto* witt = app.add_subcommand("witt", "Witt invariants and surgery obstruction of a form");
  witt->add_option("file", file)->required();
  witt->add_option("--n", n)->required();

  auto* wallmu = app.add_subcommand("wallmu", "Wall self-intersection from double points");
  wallmu->add_option("file", file)->required();

  auto* hopf = app.add_subcommand("hopf", "degree calculus of the Hopf invariant");
  hopf->add_option("args", hopf_args, "degree D | bidegree F G | compose F1 G1 F2 G2 | smash F G | curvint ... | kunneth FILE")
      ->required();
  hopf->allow_extras(false);

  auto* check = app.add_subcommand("check", "run built-in property suites");
  check->add_option("suite", suite, "qgroups, steenrod, quadratic, witt or all")->required();
  check->add_option("--seed", seed);
  auto* check_golden = check->add_option("--golden", golden, "JSON object of expected values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    std::optional<Report> rep;
    if (app.got_subcommand(homology)) {
      rep = cmd_homology(file, homology_degree->count() ? std::optional<int>(degree) : std::nullopt, ring);
    } else if (app.got_subcommand(qgroup)) {
      rep = cmd_qgroup(file, kind, n, i, j, qgroup_k->count() ? std::optional<std::string>(k) : std::nullopt);
    } else if (app.got_subcommand(sq)) {
      rep = cmd_sq(file, i, degree, sq_cocycle->count() ? std::optional<std::string>(cocycle) : std::nullopt, generator);
    } else if (app.got_subcommand(symmetric)) {
      rep = cmd_symmetric(file, symmetric_k->count() ? std::optional<int>(order) : std::nullopt, ring);
    } else if (app.got_subcommand(quadratic)) {
      rep = cmd_quadratic(file, quadratic_kmax->count() ? std::optional<int>(kmax) : std::nullopt);
    } else if (app.got_subcommand(witt)) {
      rep = cmd_witt(file, n);
    } else if (app.got_subcommand(wallmu)) {
      rep = cmd_wallmu(file);
    } else if (app.got_subcommand(hopf)) {
      rep = cmd_hopf(hopf_args);
    } else if (app.got_subcommand(check)) {
      rep = cmd_check(suite, seed, check_golden->count() ? std::optional<std::string>(golden) : std::nullopt);
    }
    out << (json ? rep->json() : rep->text());
    return rep->exit_code();
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace hopf::cli
