#include "qwitt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qwitt/divided.hpp"
#include "qwitt/expr.hpp"
#include "qwitt/lie.hpp"
#include "qwitt/pbw.hpp"
#include "qwitt/qnumbers.hpp"
#include "qwitt/realize.hpp"
#include "qwitt/virasoro.hpp"

namespace qwitt {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string mode;
  int l = 0;
  bool json = false;
  long long window = -1;
  int jobs = 1;
  std::uint64_t seed = 0;
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

json matrix_json(const TMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> matrix_lines(const TMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back("  [" + join(row, ", ") + "]");
  }
  return out;
}

std::string index_set(const std::vector<std::size_t>& s) {
  std::vector<std::string> v;
  for (auto k : s) v.push_back(std::to_string(k));
  return "{" + join(v, ", ") + "}";
}

// Collects the result of one command as text lines and as a JSON document.
class Session {
 public:
  Session(const Globals& g, std::string command) : g_(g) {
    doc_["command"] = std::move(command);
  }

  const Globals& globals() const { return g_; }

  ScalarField field() {
    std::string mode = g_.mode.empty() ? (g_.l > 0 ? "root" : "generic") : g_.mode;
    if (mode == "generic") {
      if (g_.l > 0) throw UsageError("--l requires --mode root");
      doc_["mode"] = "generic";
      return ScalarField::generic();
    }
    if (g_.l < 2) throw UsageError("--mode root needs --l with l >= 2");
    doc_["mode"] = "root";
    doc_["l"] = g_.l;
    return ScalarField::root_of_unity(g_.l);
  }
  ScalarField root_field() {
    if (g_.l < 2) throw UsageError("this command needs --l with l >= 2");
    if (g_.mode == "generic") throw UsageError("this command needs --mode root");
    return field();
  }

  long long window_or(long long fallback) const { return g_.window >= 0 ? g_.window : fallback; }

  json& doc() { return doc_; }
  void line(const std::string& s) { lines_.push_back(s); }
  void set(const std::string& key, json value, const std::string& label, const std::string& text) {
    doc_[key] = std::move(value);
    line(label + ": " + text);
  }

  void report(const CheckReport& r) {
    json j;
    j["name"] = r.name;
    j["verdict"] = r.ok();
    j["checked"] = r.checked;
    j["failed"] = r.failed;
    j["counterexamples"] = r.counterexamples;
    if (!r.notes.empty()) j["notes"] = r.notes;
    doc_["checks"].push_back(std::move(j));
    line(r.name + ": " + (r.ok() ? "PASS" : "FAIL") + " (" + std::to_string(r.checked) + " checked, " +
         std::to_string(r.failed) + " failed)");
    for (const auto& c : r.counterexamples) line("  counterexample: " + c);
    for (const auto& n : r.notes) line("  note: " + n);
    failed_ = failed_ || !r.ok();
  }
  void fail() { failed_ = true; }

  int finish(std::ostream& out) {
    doc_["verdict"] = !failed_;
    if (g_.json) {
      out << doc_.dump(2) << "\n";
    } else {
      for (const auto& l : lines_) out << l << "\n";
    }
    return failed_ ? 1 : 0;
  }

 private:
  Globals g_;
  json doc_ = json::object();
  std::vector<std::string> lines_;
  bool failed_ = false;
};

GradedAlgebra pick_algebra(Session& s, const std::string& name, long long size) {
  const ScalarField f = s.field();
  const std::string chosen = !name.empty() ? name : (f.is_root_of_unity() ? "witt-eps" : "witt-q1");
  GradedAlgebra alg = GradedAlgebra::by_name(chosen, f, size);
  s.doc()["algebra"] = alg.name();
  return alg;
}

std::vector<BasisElement> letters_of(Session& s, const GradedAlgebra& alg, long long fallback) {
  if (alg.is_finite()) return alg.basis();
  const long long w = s.window_or(fallback);
  s.doc()["window"] = w;
  return alg.window(-w, w);
}

ReductionSystem pbw_system(Session& s, const std::string& name, long long size) {
  return ReductionSystem(pick_algebra(s, name, size));
}

// ------------------------------------------------------------------ commands

void cmd_qnum(Session& s, const std::string& kind, long long n, long long r) {
  const ScalarField f = s.field();
  Scalar v(f);
  if (kind == "integer")
    v = q_integer(f, n);
  else if (kind == "factorial")
    v = q_factorial(f, n);
  else
    v = gauss_binomial(f, n, r);
  s.doc()["kind"] = kind;
  s.doc()["n"] = n;
  if (kind == "binomial") s.doc()["r"] = r;
  s.doc()["value"] = v.to_string();
  s.line(v.to_string());
}

void cmd_bracket(Session& s, const std::string& name, long long size, const std::string& lhs, const std::string& rhs) {
  const GradedAlgebra alg = pick_algebra(s, name, size);
  const AlgebraElement x = eval_element(*parse(lhs), alg);
  const AlgebraElement y = eval_element(*parse(rhs), alg);
  const AlgebraElement br = alg.bracket(x, y);
  s.doc()["lhs"] = x.to_string();
  s.doc()["rhs"] = y.to_string();
  s.doc()["result"] = br.to_string();
  s.line(br.to_string());
}

void cmd_bracket_table(Session& s, const std::string& name, long long size) {
  const GradedAlgebra alg = pick_algebra(s, name, size);
  const auto letters = letters_of(s, alg, 3);
  json table = json::array();
  for (const auto& x : letters)
    for (const auto& y : letters) {
      const AlgebraElement br = alg.bracket(x, y);
      table.push_back({{"lhs", x.to_string()}, {"rhs", y.to_string()}, {"result", br.to_string()}});
      s.line("{" + x.to_string() + ", " + y.to_string() + "} = " + br.to_string());
    }
  s.doc()["table"] = std::move(table);
}

void cmd_verify(Session& s, const std::string& what, const std::string& name, long long size) {
  if (what == "jacobi" || what == "antisym") {
    const GradedAlgebra alg = pick_algebra(s, name, size);
    if (what == "antisym") {
      const auto letters = letters_of(s, alg, 10);
      s.report(verify_antisymmetry(alg, letters));
      s.report(verify_grading(alg, letters));
      return;
    }
    if (alg.kind() == AlgebraKind::VirasoroQ) {
      const long long w = s.window_or(8);
      s.doc()["window"] = w;
      CheckReport rep = sweep_weighted_jacobi(alg, virasoro_triples(w), s.globals().jobs);
      rep.name = "weighted Jacobi, i + j + k = 0";
      s.report(rep);
      CheckReport rest = sweep_weighted_jacobi(alg, all_triples(alg.window(-3, 3)), s.globals().jobs);
      rest.name = "weighted Jacobi, window 3";
      s.report(rest);
      return;
    }
    s.report(sweep_weighted_jacobi(alg, all_triples(letters_of(s, alg, 6)), s.globals().jobs));
    return;
  }
  const ScalarField f = s.field();
  if (what == "leibniz") {
    CheckReport rep;
    rep.name = "skew Leibniz rule";
    const long long top = f.is_root_of_unity() ? f.order() - 1 : s.window_or(10);
    for (long long a = 0; a <= top; ++a)
      for (long long b = 0; b <= top; ++b)
        rep.record(verify_skew_leibniz(DividedElement::monomial(f, a), DividedElement::monomial(f, b)),
                   "x^(" + std::to_string(a) + "), x^(" + std::to_string(b) + ")");
    s.report(rep);
    CheckReport laurent;
    laurent.name = "skew Leibniz rule on Laurent polynomials";
    const long long w = s.window_or(10);
    for (long long a = -w; a <= w; ++a)
      for (long long b = -w; b <= w; ++b)
        laurent.record(verify_skew_leibniz(LaurentPoly::monomial(f, a), LaurentPoly::monomial(f, b)),
                       "x^" + std::to_string(a) + ", x^" + std::to_string(b));
    s.report(laurent);
    return;
  }
  if (what == "pascal") {
    CheckReport rep;
    rep.name = "q-Pascal identities";
    const long long w = s.window_or(12);
    for (long long a = -6; a <= w; ++a)
      for (long long b = -6; b <= w; ++b)
        rep.record(verify_q_pascal(f, a, b), "a=" + std::to_string(a) + " b=" + std::to_string(b));
    s.report(rep);
    return;
  }
  if (!f.is_generic()) throw UsageError("the Virasoro cocycle is only defined for generic q");
  s.report(verify_cocycle_recursion(f, s.window_or(20)));
  s.report(verify_cocycle_antisymmetry(f, 12));
}

void cmd_normal_form(Session& s, const std::string& name, long long size, const std::string& text,
                     const std::string& strategy) {
  const ReductionSystem sys = pbw_system(s, name, size);
  const NoncommPoly p = eval_noncomm(*parse(text), sys.algebra());
  const NoncommPoly nf = sys.normal_form(p, strategy == "rightmost" ? Strategy::Rightmost : Strategy::Leftmost);
  json words = json::array(), coeffs = json::array();
  for (const auto& [w, c] : nf.sorted_terms()) {
    words.push_back(word_to_string(w));
    coeffs.push_back(c.to_string());
  }
  s.doc()["input"] = p.to_string();
  s.doc()["normal_form"] = nf.to_string();
  s.doc()["words"] = std::move(words);
  s.doc()["coefficients"] = std::move(coeffs);
  s.line(nf.to_string());
}

void cmd_confluence(Session& s, const std::string& name, long long size, std::size_t samples, std::size_t length) {
  const ReductionSystem sys = pbw_system(s, name, size);
  const auto letters = letters_of(s, sys.algebra(), 4);
  const ConfluenceReport rep = check_confluence(sys, letters, s.globals().jobs);
  s.report(rep.compatibility);
  s.report(rep.relations);
  s.report(rep.ambiguities);
  s.report(rep.jacobi_sums);
  if (samples > 0)
    s.report(strategy_agreement(sys, letters, length, samples, s.globals().seed, s.globals().jobs));
}

void cmd_central(Session& s) {
  const ReductionSystem sys(GradedAlgebra::witt_eps11(s.root_field().order()));
  s.doc()["algebra"] = sys.algebra().name();
  s.report(central_elements_check(sys, s.globals().jobs));
}

void power_line(Session& s, const PowerCommutation& p, json& out) {
  json j = {{"i", p.i}, {"j", p.j}, {"n", p.n}, {"first_equality", p.first_equality}};
  std::string text = "i=" + std::to_string(p.i) + " j=" + std::to_string(p.j) + " n=" + std::to_string(p.n) +
                     ": first equality " + (p.first_equality ? "holds" : "FAILS");
  if (p.has_closed_form) {
    j["closed_form"] = p.closed_form;
    if (!p.closed_form) j["discrepancy"] = p.discrepancy;
    text += p.closed_form ? ", closed form agrees" : ", closed form differs by " + p.discrepancy;
  }
  out.push_back(std::move(j));
  s.line(text);
}

void cmd_power_comm(Session& s, std::optional<long long> i, std::optional<long long> j, std::optional<long long> n) {
  const ReductionSystem sys(GradedAlgebra::witt_eps11(s.root_field().order()));
  s.doc()["algebra"] = sys.algebra().name();
  json results = json::array();
  CheckReport first, closed;
  first.name = "power commutation, first equality";
  closed.name = "power commutation, closed form (reported only)";
  const long long l = sys.field().order();
  const long long nmax = s.window_or(4);
  for (long long a = -1; a <= l - 2; ++a)
    for (long long b = -1; b <= l - 2; ++b)
      for (long long m = 0; m <= nmax; ++m) {
        if ((i && *i != a) || (j && *j != b) || (n && *n != m)) continue;
        const PowerCommutation p = power_commutation_check(sys, a, b, m);
        power_line(s, p, results);
        const std::string tag = "i=" + std::to_string(a) + " j=" + std::to_string(b) + " n=" + std::to_string(m);
        first.record(p.first_equality, tag);
        if (p.has_closed_form) closed.record(p.closed_form, tag);
      }
  s.doc()["results"] = std::move(results);
  s.report(first);
  json c = {{"name", closed.name}, {"checked", closed.checked}, {"disagreements", closed.failed}};
  s.doc()["closed_form"] = c;
  s.line(closed.name + ": " + std::to_string(closed.checked - closed.failed) + " of " + std::to_string(closed.checked) +
         " agree");
}

void cmd_graded_law(Session& s) {
  const ReductionSystem sys(GradedAlgebra::witt_eps11(s.root_field().order()));
  s.doc()["algebra"] = sys.algebra().name();
  s.report(graded_leading_term_check(sys));
}

void cmd_zero_divisors(Session& s, const std::string& name, long long size, std::size_t samples) {
  const ReductionSystem sys = pbw_system(s, name, size);
  s.doc()["seed"] = s.globals().seed;
  s.report(zero_divisor_sample(sys, letters_of(s, sys.algebra(), 3), samples, s.globals().seed));
}

void module_matrices(Session& s, const ModuleRealization& m) {
  json mats = json::object();
  for (const auto& [x, mat] : m.action) {
    mats[x.to_string()] = matrix_json(mat);
    s.line(x.to_string() + ":");
    for (const auto& l : matrix_lines(mat)) s.line(l);
  }
  s.doc()["dimension"] = m.dim;
  s.doc()["matrices"] = std::move(mats);
  if (m.grading) s.doc()["grading"] = *m.grading;
}

void module_analysis(Session& s, const ModuleRealization& m, int l, const TScalar& t) {
  const SubmoduleAnalysis an = graded_submodule_analysis(m);
  json subs = json::array(), series = json::array();
  std::vector<std::string> subs_text;
  for (const auto& sub : an.submodules) {
    subs.push_back(sub);
    subs_text.push_back(index_set(sub));
  }
  std::vector<std::string> series_text;
  for (const auto& sub : an.composition_series) {
    series.push_back(sub);
    series_text.push_back(index_set(sub));
  }
  std::vector<std::string> dims;
  for (auto d : an.factor_dims) dims.push_back(std::to_string(d));
  s.doc()["submodules"] = std::move(subs);
  s.doc()["composition_series"] = std::move(series);
  s.doc()["composition_dims"] = an.factor_dims;
  s.doc()["irreducible"] = an.irreducible;
  s.line("irreducible: " + std::string(an.irreducible ? "true" : "false"));
  s.line("composition dims: [" + join(dims, ", ") + "]");
  s.line("composition series: " + join(series_text, " < "));
  s.line("graded submodules: " + join(subs_text, ", "));
  const auto [base, top] = base_top_eigenvalues(m);
  const TScalar predicted = predicted_top_eigenvalue(l, t);
  s.set("base_eigenvalue", base.to_string(), "base eigenvalue", base.to_string());
  s.set("top_eigenvalue", top.to_string(), "top eigenvalue", top.to_string());
  CheckReport eig;
  eig.name = "base and top eigenvalues";
  eig.record(base == t, "base eigenvalue " + base.to_string() + " != t");
  eig.record(top == predicted, "top eigenvalue " + top.to_string() + " != " + predicted.to_string());
  s.report(eig);
}

void cmd_module(Session& s, const std::string& action, const std::string& t_text, const std::string& a_text,
                const std::string& omega_text) {
  if (action == "realize" && (s.globals().mode == "generic" || (s.globals().mode.empty() && s.globals().l == 0))) {
    const ScalarField f = s.field();
    const TScalar t = eval_weight(*parse(t_text), f);
    const long long w = s.window_or(8);
    const ModuleRealization m = realize_module_generic(w, t);
    s.doc()["t"] = t.to_string();
    s.doc()["window"] = w;
    module_matrices(s, m);
    s.report(verify_module_axiom(m));
    if (t == TScalar::t(f)) s.report(verify_classical_realization(m, w));
    return;
  }
  const ScalarField f = s.root_field();
  const int l = f.order();
  const TScalar t = eval_weight(*parse(t_text), f);
  s.doc()["t"] = t.to_string();
  if (action == "analyze" || action == "realize") {
    const ModuleRealization m = realize_module(l, t);
    module_matrices(s, m);
    s.report(verify_module_axiom(m));
    if (action == "analyze") module_analysis(s, m, l, t);
    return;
  }
  const HolomorphRepTriple h = example_holomorph_triple(l);
  if (action == "compat") {
    const CompatReport rep = holomorph_compat_check(h);
    json entries = json::array();
    for (const auto& e : rep.entries) {
      entries.push_back({{"i", e.i},
                         {"j", e.j},
                         {"mu", e.mu ? json(e.mu->to_string()) : json(nullptr)},
                         {"proportional", e.proportional},
                         {"printed", e.printed},
                         {"scaled", e.scaled}});
      if (e.mu) s.line("mu(" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") = " + e.mu->to_string());
    }
    s.doc()["entries"] = std::move(entries);
    s.set("normalization", rep.normalization(), "normalization", rep.normalization());
    s.report(rep.proportionality);
    s.report(verify_psi_commutation(h));
    if (!rep.ok()) s.fail();
    return;
  }
  if (action == "deform") {
    const TScalar a = eval_weight(*parse(a_text), f);
    const ModuleRealization m = deform_representation(h, a);
    s.doc()["a"] = a.to_string();
    module_matrices(s, m);
    s.report(verify_module_axiom(m));
    CheckReport same;
    same.name = "agreement with the realization at t = a";
    const ModuleRealization r = realize_module(l, a);
    for (const auto& [x, mat] : r.action) same.record(m.action.at(x) == mat, x.to_string());
    s.report(same);
    return;
  }
  const TScalar w = eval_weight(*parse(omega_text), f);
  TMatrix rho(1, 1, TScalar(f));
  rho(0, 0) = w;
  const ModuleRealization m = tensor_representation(h, rho);
  s.doc()["omega"] = w.to_string();
  module_matrices(s, m);
  s.report(verify_module_axiom(m));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with q-deformed Witt and Virasoro algebras", "qwitt"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--mode", g.mode, "generic (q transcendental) or root (q a primitive l-th root of unity)")
      ->check(CLI::IsMember({"generic", "root"}));
  app.add_option("--l", g.l, "order of the root of unity; implies --mode root");
  app.add_flag("--json", g.json, "emit one JSON document");
  app.add_option("--window", g.window, "index bound for infinite algebras and sweeps");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for sampled checks");

  std::string command;
  std::function<void(Session&)> action;
  auto leaf = [&](CLI::App* sub, std::string name, std::function<void(Session&)> fn) {
    sub->callback([&action, &command, name, fn] {
      command = name;
      action = fn;
    });
  };

  std::string algebra;
  long long size = 0;
  auto with_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra, "witt-q, witt-q1, witt-eps, virasoro-q, holomorph-q, holomorph-eps, q-abelian");
    sub->add_option("--size", size, "dimension of q-abelian (0 for infinite)");
  };

  // qnum
  std::string kind = "integer";
  long long qn = 0, qr = 0;
  auto* qnum = app.add_subcommand("qnum", "q-integers, q-factorials and Gaussian binomials");
  qnum->add_option("--kind", kind)->check(CLI::IsMember({"integer", "factorial", "binomial"}));
  qnum->add_option("--n", qn)->required();
  qnum->add_option("--r", qr);
  leaf(qnum, "qnum", [&](Session& s) { cmd_qnum(s, kind, qn, qr); });

  // bracket, bracket-table
  std::string lhs, rhs;
  auto* bracket = app.add_subcommand("bracket", "the q-bracket of two elements");
  with_algebra(bracket);
  bracket->add_option("--lhs", lhs)->required();
  bracket->add_option("--rhs", rhs)->required();
  leaf(bracket, "bracket", [&](Session& s) { cmd_bracket(s, algebra, size, lhs, rhs); });
  auto* table = app.add_subcommand("bracket-table", "all brackets of basis elements");
  with_algebra(table);
  leaf(table, "bracket-table", [&](Session& s) { cmd_bracket_table(s, algebra, size); });

  // verify
  auto* verify = app.add_subcommand("verify", "identity sweeps");
  verify->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> verifies = {
      {"jacobi", "weighted q-Jacobi identity over basis triples"},
      {"antisym", "q-antisymmetry and grading of the bracket"},
      {"leibniz", "skew Leibniz rule for the q-derivation"},
      {"pascal", "q-Pascal identities for Gaussian binomials"},
      {"cocycle", "Virasoro cocycle recursion against the closed form"}};
  for (const auto& [what, help] : verifies) {
    auto* sub = verify->add_subcommand(what, help);
    if (what == "jacobi" || what == "antisym") with_algebra(sub);
    const std::string w = what;
    leaf(sub, "verify " + w, [&, w](Session& s) { cmd_verify(s, w, algebra, size); });
  }

  // pbw
  std::string expr_text, strategy = "leftmost";
  std::size_t samples = 0, length = 4, zd_samples = 100;
  std::optional<long long> pi, pj, pn;
  auto* pbw = app.add_subcommand("pbw", "enveloping algebra computations");
  pbw->require_subcommand(1);
  auto* nf = pbw->add_subcommand("normal-form", "PBW normal form of an expression");
  with_algebra(nf);
  nf->add_option("--expr", expr_text)->required();
  nf->add_option("--strategy", strategy)->check(CLI::IsMember({"leftmost", "rightmost"}));
  leaf(nf, "pbw normal-form", [&](Session& s) { cmd_normal_form(s, algebra, size, expr_text, strategy); });
  auto* conf = pbw->add_subcommand("confluence", "overlap ambiguities, Jacobi sums and strategy agreement");
  with_algebra(conf);
  conf->add_option("--samples", samples, "random words compared across strategies");
  conf->add_option("--length", length, "length of the random words");
  leaf(conf, "pbw confluence", [&](Session& s) { cmd_confluence(s, algebra, size, samples, length); });
  auto* central = pbw->add_subcommand("central", "centrality of the l-th powers");
  leaf(central, "pbw central", [&](Session& s) { cmd_central(s); });
  auto* power = pbw->add_subcommand("power-comm", "commutators of powers with basis elements");
  power->add_option("--i", pi);
  power->add_option("--j", pj);
  power->add_option("--n", pn);
  leaf(power, "pbw power-comm", [&](Session& s) { cmd_power_comm(s, pi, pj, pn); });
  auto* graded = pbw->add_subcommand("graded-law", "leading terms of reordered divided powers");
  leaf(graded, "pbw graded-law", [&](Session& s) { cmd_graded_law(s); });
  auto* zd = pbw->add_subcommand("zero-divisors", "sampled products of nonzero elements");
  with_algebra(zd);
  zd->add_option("--samples", zd_samples);
  leaf(zd, "pbw zero-divisors", [&](Session& s) { cmd_zero_divisors(s, algebra, size, zd_samples); });

  // module
  std::string t_text = "t", a_text = "t", omega_text = "1";
  auto* module = app.add_subcommand("module", "graded representations; analyze when no action is given");
  module->require_subcommand(0, 1);
  module->add_option("--t", t_text, "weight of e(0) on the base space; 't' keeps it symbolic");
  const std::vector<std::pair<std::string, std::string>> modules = {
      {"realize", "matrices of the divided-power module"},
      {"analyze", "graded submodules, composition series and eigenvalues"},
      {"deform", "deformation of the holomorph example by --a"},
      {"tensor", "tensor product with a 1 x 1 representation of omega"},
      {"compat", "compatibility of the holomorph example pair"}};
  for (const auto& [what, help] : modules) {
    auto* sub = module->add_subcommand(what, help);
    if (what == "deform") sub->add_option("--a", a_text, "deformation parameter");
    if (what == "tensor") sub->add_option("--omega", omega_text, "the 1 x 1 matrix rho(omega)");
    const std::string w = what;
    leaf(sub, "module " + w, [&, w](Session& s) { cmd_module(s, w, t_text, a_text, omega_text); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (!action && module->parsed()) {
    command = "module analyze";
    action = [&](Session& s) { cmd_module(s, "analyze", t_text, a_text, omega_text); };
  }
  if (!action) {
    err << app.help();
    return 2;
  }
  try {
    Session s(g, command);
    action(s);
    return s.finish(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace qwitt
