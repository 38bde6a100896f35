#include "arcic/cli.hpp"

#include "arcic/acceptance.hpp"
#include "arcic/error.hpp"
#include "arcic/global_curve.hpp"
#include "arcic/io.hpp"
#include "arcic/satake.hpp"
#include "arcic/strata.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <set>

namespace arcic {

namespace {

struct LoadedCone {
  Json canonical;
  SaturatedMonoid monoid;
};

LoadedCone load_cone(const std::string& path) {
  Json canonical = canonicalize_input(read_json_file(path));
  ConeInput in = parse_cone(canonical);
  return {canonical, SaturatedMonoid::from_generators(in.rank, in.generators)};
}

Json points_to_json(const std::vector<LatticePoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(vector_to_json(p));
  return a;
}

void add_monoid_payload(RunReport& r, const SaturatedMonoid& m) {
  r.payload["hilbert_basis"] = points_to_json(m.hilbert_basis());
  r.payload["grading"] = vector_to_json(m.grading());
  r.payload["warnings"] = m.warnings();
}

Integer require_nonnegative(const Integer& x, const char* what, const std::string& path) {
  if (x < 0) throw InputError(std::string(what) + " must be nonnegative", path);
  return x;
}

RunReport run_toric(const std::string& cone_path, const std::string* bound_text, const std::string* lambda_text) {
  LoadedCone c = load_cone(cone_path);
  const SaturatedMonoid& m = c.monoid;
  RunReport r;
  r.command = "toric";
  r.inputs["cone"] = c.canonical;
  add_monoid_payload(r, m);
  if (lambda_text) {
    LatticePoint lambda = parse_point(*lambda_text, m.rank(), "/lambda");
    r.inputs["lambda"] = vector_to_json(lambda);
    HalfLaurent value = ic_arc_value(m, lambda);
    HalfLaurent from_series = toric_ic_series(m, m.grade(lambda)).coefficient(lambda);
    r.payload["lambda"] = vector_to_json(lambda);
    r.payload["coeff"] = laurent_to_json(value);
    r.add("m" + lambda.to_string() + " vs product series", laurent_to_json(value), laurent_to_json(from_series),
          value == from_series);
    return r;
  }
  Integer bound = require_nonnegative(parse_integer_list(*bound_text, "/bound").at(0), "bound", "/bound");
  r.inputs["bound"] = integer_to_json(bound);
  GradedSeries series = toric_ic_series(m, bound);
  Json terms = Json::array();
  std::size_t mismatches = 0;
  for (const auto& lambda : enumerate_up_to(m.cone(), m.grading(), bound)) {
    HalfLaurent coeff = series.coefficient(lambda);
    if (coeff != HalfLaurent(decomposition_count(m, lambda))) ++mismatches;
    terms.push_back({{"lambda", vector_to_json(lambda)}, {"coeff", laurent_to_json(coeff)}});
  }
  r.add("series coefficients equal decomposition counts (" + std::to_string(terms.size()) + " terms)",
        static_cast<std::int64_t>(mismatches), 0, mismatches == 0);
  r.payload["terms"] = std::move(terms);
  return r;
}

RunReport run_hilbert(const std::string& cone_path) {
  LoadedCone c = load_cone(cone_path);
  const SaturatedMonoid& m = c.monoid;
  RunReport r;
  r.command = "hilbert";
  r.inputs["cone"] = c.canonical;
  add_monoid_payload(r, m);
  Json facets = Json::array();
  for (const auto& f : m.cone().facets()) facets.push_back(vector_to_json(f));
  r.payload["facets"] = std::move(facets);
  const auto& basis = m.hilbert_basis();
  bool antichain = true;
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!(a == b) && m.contains(a - b)) antichain = false;
  r.add("no basis element dominates another", antichain, true, antichain);
  return r;
}

RunReport run_strata(const std::string& cone_path, const std::string& lambda_text) {
  LoadedCone c = load_cone(cone_path);
  const SaturatedMonoid& m = c.monoid;
  LatticePoint lambda = parse_point(lambda_text, m.rank(), "/lambda");
  m.require_member(lambda, "lambda");
  RunReport r;
  r.command = "strata";
  r.inputs["cone"] = c.canonical;
  r.inputs["lambda"] = vector_to_json(lambda);
  add_monoid_payload(r, m);

  ClosurePoset poset = closure_poset(m, lambda);
  Json elements = Json::array();
  std::size_t primitive_count = 0;
  std::set<std::size_t> primitive;
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    const CMultiset& mu = poset.elements[i];
    Json parts = Json::array();
    for (const auto& [p, k] : mu.parts())
      parts.push_back({{"point", vector_to_json(p)}, {"multiplicity", k}});
    bool prim = is_primitive_multiset(m, mu);
    if (prim) {
      ++primitive_count;
      primitive.insert(i);
    }
    elements.push_back({{"index", i}, {"multiset", mu.to_string()}, {"parts", parts}, {"primitive", prim}});
  }
  Json covers = Json::array();
  for (const auto& [i, j] : poset.covers()) covers.push_back({i, j});
  auto maxima = poset.maxima();
  r.payload["multisets"] = std::move(elements);
  r.payload["covers"] = std::move(covers);
  r.payload["maxima"] = maxima;
  const Integer m_lambda = decomposition_count(m, lambda);
  r.payload["m_lambda"] = integer_to_json(m_lambda);

  if (!lambda.is_zero()) {
    std::size_t minimum = poset.minimum();
    r.add("minimum is e^lambda", poset.elements[minimum].to_string(), CMultiset::single(m, lambda).to_string(),
          poset.elements[minimum] == CMultiset::single(m, lambda));
    r.payload["minimum"] = minimum;
  }
  r.add("maximal elements are the primitive multisets", maxima, Json(primitive),
        std::set<std::size_t>(maxima.begin(), maxima.end()) == primitive);
  r.add("number of primitive multisets equals m_lambda", primitive_count, integer_to_json(m_lambda),
        Integer(primitive_count) == m_lambda);
  return r;
}

RunReport run_global(const std::string& cone_path, const std::string& q_text, const std::string& bound_text) {
  LoadedCone c = load_cone(cone_path);
  const SaturatedMonoid& m = c.monoid;
  Integer q = parse_integer_list(q_text, "/q").at(0);
  if (q < 2) throw InputError("q must be at least 2", "/q");
  Integer bound = require_nonnegative(parse_integer_list(bound_text, "/bound").at(0), "bound", "/bound");
  RunReport r;
  r.command = "global";
  r.inputs["cone"] = c.canonical;
  r.inputs["q"] = integer_to_json(q);
  r.inputs["bound"] = integer_to_json(bound);
  add_monoid_payload(r, m);

  CurveData curve = CurveData::projective_line(q, static_cast<std::size_t>(bound));
  GradedSeries euler = global_euler_product(m, curve, bound);
  Json values = Json::array();
  for (const auto& lambda : enumerate_up_to(m.cone(), m.grading(), bound)) {
    Integer direct = divisor_sum_direct(m, curve, lambda);
    Integer normal = divisor_sum_via_normalization(m, curve, lambda);
    HalfLaurent coeff = euler.coefficient(lambda);
    bool ok = direct == normal && coeff == HalfLaurent(direct);
    Json row = {{"direct", integer_to_json(direct)},
                {"normalization", integer_to_json(normal)},
                {"euler_product", laurent_to_json(coeff)}};
    values.push_back({{"lambda", vector_to_json(lambda)}, {"values", row}, {"status", ok ? "pass" : "fail"}});
    r.add("lambda = " + lambda.to_string(), row, "all equal", ok);
  }
  r.payload["values"] = std::move(values);
  return r;
}

struct LmonoidArgs {
  std::size_t n_gl = 0;
  std::string rep = "standard";
  std::string mu;
  std::string q_numeric;
  bool has_q = false;
  std::string convention = "plus";
  int alpha_sign = 1;
};

RunReport run_lmonoid(const LmonoidArgs& a) {
  if (a.n_gl == 0) throw InputError("--n-gl must be at least 1", "/n_gl");
  Partition rep = a.rep == "standard" ? Partition{1} : make_partition([&] {
    std::vector<int> parts;
    for (const auto& x : parse_integer_list(a.rep, "/rep")) parts.push_back(static_cast<int>(x));
    return parts;
  }());
  std::vector<int> mu;
  for (const auto& x : parse_integer_list(a.mu, "/mu")) {
    if (x > 1000 || x < -1000) throw DomainError("entries of mu must lie in [-1000, 1000]");
    mu.push_back(static_cast<int>(x));
  }
  SatakeConvention conv = parse_convention(a.convention);
  if (a.alpha_sign != 1 && a.alpha_sign != -1) throw InputError("--alpha-sign must be 1 or -1", "/alpha_sign");

  HalfLaurent ic = ic_lmonoid_value(a.n_gl, rep, mu, conv);
  DominantWeight w(mu);
  HalfLaurent psi = psi_n(a.n_gl, rep, w.total(), conv).value(w);

  RunReport r;
  r.command = "lmonoid";
  r.inputs = {{"n_gl", a.n_gl}, {"rep", partition_to_string(rep)}, {"mu", mu}, {"convention", to_string(conv)}};
  r.payload["n"] = w.total();
  r.payload["nu_pairing"] = nu_pairing(a.n_gl, w).to_string();
  r.payload["psi"] = laurent_to_json(psi);
  r.payload["ic"] = laurent_to_json(ic);
  if (a.has_q) {
    Integer q = parse_integer_list(a.q_numeric, "/q_numeric").at(0);
    if (q < 2) throw InputError("--q-numeric must be at least 2", "/q_numeric");
    r.inputs["q_numeric"] = integer_to_json(q);
    r.inputs["alpha_sign"] = a.alpha_sign;
    r.payload["specialization"] = {{"psi", numeric_to_json(psi, q, a.alpha_sign)},
                                   {"ic", numeric_to_json(ic, q, a.alpha_sign)}};
  }
  if (conv == SatakeConvention::plus) {
    r.add("IC value on Mat_N(O) is 1", laurent_to_json(ic), laurent_to_json(HalfLaurent(1)), ic == HalfLaurent(1));
  } else {
    r.info("IC value (minus convention)", laurent_to_json(ic));
  }
  return r;
}

RunReport run_check_all(const std::string& suite, std::vector<CriterionResult>& criteria) {
  if (suite != "desk") throw InputError("unknown suite '" + suite + "', expected desk", "/suite");
  RunReport r;
  r.command = "check-all";
  r.inputs["suite"] = suite;
  criteria = run_acceptance();
  Json list = Json::array();
  for (const auto& c : criteria) {
    list.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    r.add(std::to_string(c.id) + ". " + c.name, c.detail, "pass", c.passed);
  }
  r.payload["criteria"] = std::move(list);
  return r;
}

void print_table(std::ostream& err, const RunReport& r, const std::vector<CriterionResult>& criteria) {
  err << r.command << "\n";
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const auto& row = r.results[i];
    std::string status = row.status == "pass" ? "PASS" : row.status == "fail" ? "FAIL" : "INFO";
    err << "  " << std::left << std::setw(5) << status << row.label;
    if (i < criteria.size()) err << "  [" << std::fixed << std::setprecision(2) << criteria[i].seconds << " s]";
    err << "\n";
  }
  err << "status: " << r.status() << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool human_table) {
  CLI::App app{"Arc-space IC functions: toric monoids, strata, global curves and L-monoids", "arc-ic"};
  app.require_subcommand(1);

  std::string cone_path, bound, lambda, q, suite = "desk";
  LmonoidArgs lm;

  auto* toric = app.add_subcommand("toric", "IC series of a toric monoid");
  toric->add_option("--cone", cone_path, "cone descriptor JSON")->required();
  auto* toric_bound = toric->add_option("--bound", bound, "grading bound");
  auto* toric_lambda = toric->add_option("--lambda", lambda, "single point a,b,...");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of a cone");
  hilbert->add_option("--cone", cone_path, "cone descriptor JSON")->required();

  auto* strata = app.add_subcommand("strata", "multisets of degree lambda and their refinement order");
  strata->add_option("--cone", cone_path, "cone descriptor JSON")->required();
  strata->add_option("--lambda", lambda, "point a,b,...")->required();

  auto* global = app.add_subcommand("global", "divisor sums over P^1 and the Euler product");
  global->add_option("--cone", cone_path, "cone descriptor JSON")->required();
  global->add_option("--q", q, "field size")->required();
  global->add_option("--bound", bound, "grading bound")->required();

  auto* lmonoid = app.add_subcommand("lmonoid", "psi_n and the IC function of Mat_N");
  lmonoid->add_option("--n-gl", lm.n_gl, "N")->required();
  lmonoid->add_option("--rep", lm.rep, "representation (standard)");
  lmonoid->add_option("--mu", lm.mu, "dominant weight m1,m2,...")->required();
  auto* q_numeric = lmonoid->add_option("--q-numeric", lm.q_numeric, "also evaluate at this q");
  lmonoid->add_option("--convention", lm.convention, "Satake convention: plus or minus");
  lmonoid->add_option("--alpha-sign", lm.alpha_sign, "v -> sign * sqrt(q) at output (1 or -1)");

  auto* check_all = app.add_subcommand("check-all", "run the acceptance suite");
  check_all->add_option("--suite", suite, "suite name (desk)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << serialize(error_json("input", e.what(), ""));
    return 2;
  }

  std::vector<CriterionResult> criteria;
  try {
    RunReport report;
    if (toric->parsed()) {
      if (!toric_bound->count() && !toric_lambda->count()) throw InputError("toric needs --bound or --lambda", "/bound");
      report = run_toric(cone_path, toric_bound->count() && !toric_lambda->count() ? &bound : nullptr,
                         toric_lambda->count() ? &lambda : nullptr);
    } else if (hilbert->parsed()) {
      report = run_hilbert(cone_path);
    } else if (strata->parsed()) {
      report = run_strata(cone_path, lambda);
    } else if (global->parsed()) {
      report = run_global(cone_path, q, bound);
    } else if (lmonoid->parsed()) {
      lm.has_q = q_numeric->count() > 0;
      report = run_lmonoid(lm);
    } else {
      report = run_check_all(suite, criteria);
    }
    out << serialize(report.to_json());
    if (human_table) print_table(err, report, criteria);
    return report.any_failed() ? 1 : 0;
  } catch (const InputError& e) {
    out << serialize(error_json(e.kind(), e.what(), e.path()));
  } catch (const Error& e) {
    out << serialize(error_json(e.kind(), e.what(), ""));
  } catch (const std::exception& e) {
    out << serialize(error_json("internal", e.what(), ""));
  }
  if (human_table) err << "error: see JSON output\n";
  return 2;
}

}  // namespace arcic
