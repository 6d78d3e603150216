#include "gradedq_cli/dispatch.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gradedq/basis.hpp"
#include "gradedq/dsl.hpp"
#include "gradedq/errors.hpp"
#include "gradedq/koszul_tate.hpp"
#include "gradedq/normal_form.hpp"
#include "gradedq/perturbation.hpp"
#include "gradedq/qmanifold.hpp"
#include "gradedq/report.hpp"

namespace gradedq::cli {
namespace {

using nlohmann::json;

constexpr int kUnset = std::numeric_limits<int>::min();

struct Options {
  std::string in = "-";
  std::string log_path;
  std::string emit_log;
  int degree = kUnset;
  int negdeg = kUnset;
  int jet = kUnset;
  int filt = kUnset;
  unsigned long seed = 20260815UL;  // fixed default keeps sampled runs reproducible
  std::string format = "text";
  bool vf = false;
  int depth = 2;

  bool structured() const { return format == "structured"; }
  std::optional<int> jet_override() const {
    return jet == kUnset ? std::nullopt : std::optional<int>(jet);
  }
  std::optional<int> filt_override() const {
    return filt == kUnset ? std::nullopt : std::optional<int>(filt);
  }
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--in", o.in, "problem file; '-' reads standard input");
  cmd->add_option("--jet", o.jet, "override the jet order of the problem file");
  cmd->add_option("--filt", o.filt, "override the filtration order of the problem file");
  cmd->add_option("--seed", o.seed, "sampling seed; exact commands accept and ignore it");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

ProblemFile load(const Options& o) {
  return parse_problem(slurp(o.in), o.jet_override(), o.filt_override());
}

const Derivation& field(const ProblemFile& p, const std::string& primary,
                        const std::string& fallback = "") {
  if (p.has_derivation(primary)) return p.derivation(primary);
  if (!fallback.empty() && p.has_derivation(fallback)) return p.derivation(fallback);
  throw UsageError("problem file defines no '" + primary + "' block");
}

json jparse(const std::string& fragment) { return json::parse(fragment); }

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

void print_chart(std::ostream& out, const Context& ctx) {
  out << "chart:";
  for (int i = 0; i < ctx.size(); ++i) out << ' ' << ctx.name(i) << ':' << ctx.degree(i);
  out << "  (jet " << ctx.jet_order() << ", filtration " << ctx.filtration_order() << ")\n";
}

void print_values(std::ostream& out, const std::string& lhs, const Derivation& d) {
  const Context& ctx = d.context();
  bool any = false;
  for (int i = 0; i < ctx.size(); ++i) {
    if (d.value(i).is_zero()) continue;
    out << lhs << '(' << ctx.name(i) << ") = " << d.value(i).str() << "\n";
    any = true;
  }
  if (!any) out << lhs << " = 0\n";
}

void write_log_file(const Options& o, const FlowLog& log) {
  if (o.emit_log.empty()) return;
  std::ofstream f(o.emit_log);
  if (!f) throw UsageError("cannot write flow log to '" + o.emit_log + "'");
  f << flowlog_json(log) << "\n";
}

// assemble and perturb read both halves of a perturbation problem from one
// chart: the resolution differential acts on the nonpositive variables, the
// zero-locus differential on the base and positive ones.
Derivation nonpositive_restriction(const Derivation& d) { return negative_part(d).q; }

Derivation nonnegative_restriction(const Derivation& d) {
  const Context& ctx = d.context();
  std::vector<bool> keep(ctx.size());
  std::vector<GradedPolynomial> vals;
  for (int i = 0; i < ctx.size(); ++i) keep[i] = ctx.degree(i) >= 0;
  Context sub = ctx.restricted(keep);
  for (int i = 0; i < ctx.size(); ++i)
    if (keep[i]) vals.push_back(GradedPolynomial::transferred(d.value(i), sub));
  return Derivation::make(sub, d.degree(), std::move(vals));
}

int resolved_degree(const Options& o) {
  if (o.degree != kUnset && o.negdeg != kUnset && o.degree != -o.negdeg)
    throw UsageError("--degree and --negdeg disagree");
  if (o.degree != kUnset) return o.degree;
  if (o.negdeg != kUnset) return -o.negdeg;
  throw UsageError("this command needs --degree D or --negdeg N");
}

// ---------------------------------------------------------------------------
// command handlers

int cmd_check(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  QCheck c = check_q(field(p, "Q", "delta"));
  if (o.structured()) {
    emit(out, json{{"op", "check"},
                   {"ok", c.ok},
                   {"square", jparse(derivation_json(c.square))}});
  } else {
    out << "square-zero: " << (c.ok ? "yes" : "no") << "\n";
    if (!c.ok) print_values(out, "square", c.square);
  }
  return c.ok ? 0 : 1;
}

int cmd_curvature(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  const Derivation& q = field(p, "Q", "delta");
  auto entries = curvature(q);
  if (o.structured()) {
    json list = json::array();
    for (const auto& [var, value] : entries)
      list.push_back(json{{"variable", p.ctx.name(var)}, {"value", value.str()}});
    emit(out, json{{"op", "curvature"}, {"entries", list}});
  } else {
    if (entries.empty()) out << "no degree -1 variables\n";
    for (const auto& [var, value] : entries)
      out << "kappa(" << p.ctx.name(var) << ") = " << value.str() << "\n";
  }
  return 0;
}

int cmd_negative_part(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  NegativePart np = negative_part(field(p, "Q", "delta"));
  if (o.structured()) {
    json kept = json::array();
    for (int i : np.kept) kept.push_back(p.ctx.name(i));
    emit(out, json{{"op", "negative-part"},
                   {"context", jparse(context_json(np.ctx))},
                   {"field", jparse(derivation_json(np.q))},
                   {"kept", kept}});
  } else {
    print_chart(out, np.ctx);
    print_values(out, "Q", np.q);
  }
  return 0;
}

int cmd_zero_locus(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  ZeroLocusDGA z = zero_locus_dga(field(p, "Q", "delta"));
  if (o.structured()) {
    json gens = json::array();
    for (const GradedPolynomial& g : z.ideal) gens.push_back(g.str());
    emit(out, json{{"op", "zero-locus"},
                   {"context", jparse(context_json(z.ctx))},
                   {"ideal", gens},
                   {"differential", jparse(derivation_json(z.differential))},
                   {"algebra_dim", z.algebra_dim},
                   {"origin_on_zero_locus", z.origin_on_zero_locus}});
  } else {
    print_chart(out, z.ctx);
    out << "ideal:";
    if (z.ideal.empty()) out << " 0";
    for (size_t i = 0; i < z.ideal.size(); ++i)
      out << (i ? "; " : " ") << z.ideal[i].str();
    out << "\n";
    print_values(out, "qI", z.differential);
    out << "algebra dimension: " << z.algebra_dim << "\n";
    out << "origin on zero locus: " << (z.origin_on_zero_locus ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_anchor(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  AnchorReport a = anchor(field(p, "Q", "delta"));
  if (o.structured()) {
    json rows = json::array(), cols = json::array();
    for (int i : a.rows) rows.push_back(p.ctx.name(i));
    for (int i : a.cols) cols.push_back(p.ctx.name(i));
    emit(out, json{{"op", "anchor"},
                   {"rows", rows},
                   {"cols", cols},
                   {"matrix", jparse(matrix_json(a.matrix))},
                   {"rank", a.rank},
                   {"origin_on_zero_locus", a.origin_on_zero_locus}});
  } else {
    out << "rows:";
    for (int i : a.rows) out << ' ' << p.ctx.name(i);
    out << "\ncols:";
    for (int i : a.cols) out << ' ' << p.ctx.name(i);
    out << "\nmatrix:\n";
    for (int r = 0; r < a.matrix.rows(); ++r) {
      out << " ";
      for (int c = 0; c < a.matrix.cols(); ++c) out << ' ' << to_string(a.matrix.at(r, c));
      out << "\n";
    }
    out << "rank: " << a.rank << "\n";
    out << "origin on zero locus: " << (a.origin_on_zero_locus ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_trivialize(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  TrivializeResult r = trivialize(field(p, "Q", "delta"));
  write_log_file(o, r.log);
  if (o.structured()) {
    emit(out, json{{"op", "trivialize"},
                   {"pivot", p.ctx.name(r.pivot_var)},
                   {"final", jparse(derivation_json(r.final_q))},
                   {"alpha", r.alpha.str()},
                   {"substitution", jparse(automorphism_json(r.substitution))},
                   {"flow_log", jparse(flowlog_json(r.log))}});
  } else {
    out << "pivot: " << p.ctx.name(r.pivot_var) << "\n";
    print_values(out, "Q'", r.final_q);
    out << "alpha: " << r.alpha.str() << "\n";
    const Context& sctx = r.substitution.context();
    for (int i = 0; i < sctx.size(); ++i) {
      const GradedPolynomial& im = r.substitution.image(i);
      if (im == GradedPolynomial::variable(sctx, i)) continue;
      out << "substitution: " << sctx.name(i) << " -> " << im.str() << "\n";
    }
    out << "flow steps: " << r.log.steps().size() << "\n";
    out << "flow-log: " << flowlog_json(r.log) << "\n";
  }
  return 0;
}

int cmd_homotopy(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  const Derivation& q = field(p, "Q", "delta");
  auto [pivot, alpha] = homotopy_alpha(q);
  GradedPolynomial unit = q.apply(alpha);
  bool exact = unit == GradedPolynomial::constant(p.ctx, 1);
  // On small charts, drive the operator identity over every surviving
  // monomial; q(alpha) = 1 already forces it by the Leibniz rule.
  int residuals = -1, checked = 0;
  if (p.ctx.size() <= 4) {
    residuals = 0;
    for (const Monomial& m : truncated_monomials(p.ctx, p.ctx.jet_order())) {
      GradedPolynomial pm = GradedPolynomial::monomial(p.ctx, m, 1);
      if (q.apply(alpha * pm) + alpha * q.apply(pm) != pm) ++residuals;
      ++checked;
    }
  }
  if (o.structured()) {
    json j{{"op", "homotopy"},
           {"pivot", p.ctx.name(pivot)},
           {"alpha", alpha.str()},
           {"exact", exact}};
    if (residuals >= 0) {
      j["basis_checked"] = checked;
      j["residuals"] = residuals;
    }
    emit(out, j);
  } else {
    out << "pivot: " << p.ctx.name(pivot) << "\n";
    out << "alpha: " << alpha.str() << "\n";
    out << "q(alpha) = 1: " << (exact ? "yes" : "no") << "\n";
    if (residuals >= 0)
      out << "identity residuals: " << residuals << " of " << checked << " monomials\n";
  }
  return (exact && residuals <= 0) ? 0 : 1;
}

int cmd_split(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  SplitResult s = split_at_point(field(p, "Q", "delta"));
  write_log_file(o, s.log);
  if (o.structured()) {
    json pairs = json::array();
    for (const SplitPair& pr : s.pairs)
      pairs.push_back(json::array({p.ctx.name(pr.base_var), p.ctx.name(pr.fiber_var)}));
    emit(out, json{{"op", "split"},
                   {"anchor_rank", s.anchor_rank},
                   {"pairs", pairs},
                   {"final", jparse(derivation_json(s.final_q))},
                   {"residual", jparse(derivation_json(s.residual))},
                   {"flow_log", jparse(flowlog_json(s.log))}});
  } else {
    out << "anchor rank: " << s.anchor_rank << "\n";
    out << "pairs:";
    if (s.pairs.empty()) out << " none";
    for (const SplitPair& pr : s.pairs)
      out << " (" << p.ctx.name(pr.base_var) << ", " << p.ctx.name(pr.fiber_var) << ")";
    out << "\n";
    print_values(out, "Q'", s.final_q);
    print_values(out, "R", s.residual);
    out << "flow steps: " << s.log.steps().size() << "\n";
    out << "flow-log: " << flowlog_json(s.log) << "\n";
  }
  return 0;
}

int cmd_kt_build(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  KTBuildResult r = kt_build(p.ctx, p.ideal, o.depth);
  if (o.structured()) {
    json adjoined = json::array(), levels = json::array();
    for (int i : r.adjoined) adjoined.push_back(r.ctx.name(i));
    for (int n : r.level_counts) levels.push_back(n);
    emit(out, json{{"op", "kt-build"},
                   {"context", jparse(context_json(r.ctx))},
                   {"delta", jparse(derivation_json(r.delta))},
                   {"adjoined", adjoined},
                   {"levels", levels},
                   {"depth", r.depth},
                   {"window", r.window},
                   {"h0_dim", r.h0_dim}});
  } else {
    print_chart(out, r.ctx);
    print_values(out, "delta", r.delta);
    out << "levels:";
    for (int n : r.level_counts) out << ' ' << n;
    out << "\ndepth: " << r.depth << "\n";
    out << "window: " << r.window << "\n";
    out << "H^0 dimension: " << r.h0_dim << "\n";
  }
  return 0;
}

int cmd_kt_verify(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  KTVerifyReport v = kt_verify(field(p, "delta", "Q"));
  bool ok = v.square_zero && v.resolution_shaped && v.acyclic;
  if (o.structured()) {
    json dims = json::array();
    for (int d : v.h_dims) dims.push_back(d);
    emit(out, json{{"op", "kt-verify"},
                   {"square_zero", v.square_zero},
                   {"resolution_shaped", v.resolution_shaped},
                   {"window", v.window},
                   {"window_reliable", v.window_reliable},
                   {"h0_dim", v.h0_dim},
                   {"h_dims", dims},
                   {"acyclic", v.acyclic},
                   {"ok", ok}});
  } else {
    out << "square-zero: " << (v.square_zero ? "yes" : "no") << "\n";
    out << "resolution-shaped: " << (v.resolution_shaped ? "yes" : "no") << "\n";
    if (v.square_zero) {
      out << "window: " << v.window << (v.window_reliable ? "" : " (naive fallback)") << "\n";
      out << "H^0 dimension: " << v.h0_dim << "\n";
      for (size_t k = 0; k < v.h_dims.size(); ++k)
        out << "H^-" << (k + 1) << " dimension: " << v.h_dims[k] << "\n";
      out << "acyclic: " << (v.acyclic ? "yes" : "no") << "\n";
    }
    out << "verdict: " << (ok ? "Koszul-Tate resolution" : "not a resolution") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_kt_cohomology(const Options& o, std::ostream& out) {
  int deg = resolved_degree(o);
  std::string text = slurp(o.in);
  ProblemFile p = parse_problem(text, o.jet_override(), o.filt_override());
  const Derivation& d = field(p, "delta", "Q");
  // Stability probe: rerun one jet order higher; a dimension is stable only
  // when the two runs agree, otherwise it is truncation-sensitive.
  ProblemFile p2 = parse_problem(text, p.ctx.jet_order() + 1, o.filt_override());
  const Derivation& d2 = field(p2, "delta", "Q");

  if (o.vf) {
    VectorFieldCohomologyReport r = advf_cohomology(d, deg);
    VectorFieldCohomologyReport r2 = advf_cohomology(d2, deg);
    bool stable = r.dim == r2.dim;
    if (o.structured()) {
      json reps = json::array();
      for (const Derivation& rep : r.representatives) reps.push_back(rep.str());
      emit(out, json{{"op", "kt-cohomology"},
                     {"variant", "vector-field"},
                     {"degree", deg},
                     {"dim", r.dim},
                     {"stability", stable ? "stable" : "truncation-sensitive"},
                     {"representatives", reps}});
    } else {
      out << "dim H^" << deg << " = " << r.dim << "\n";
      out << "stability: " << (stable ? "stable" : "truncation-sensitive") << "\n";
      for (const Derivation& rep : r.representatives)
        out << "representative: " << rep.str() << "\n";
    }
    return 0;
  }

  CohomologyReport r = complex_cohomology(d, deg);
  CohomologyReport r2 = complex_cohomology(d2, deg);
  bool stable = r.dim == r2.dim && r.reliable && r2.reliable;
  if (o.structured()) {
    json reps = json::array();
    for (const GradedPolynomial& rep : r.representatives) reps.push_back(rep.str());
    json j{{"op", "kt-cohomology"},
           {"variant", "complex"},
           {"degree", deg},
           {"dim", r.dim},
           {"windowed", r.windowed},
           {"window", r.window},
           {"reliable", r.reliable},
           {"stability", stable ? "stable" : "truncation-sensitive"},
           {"representatives", reps}};
    if (!r.reliable) j["caveat"] = "window degenerate at this truncation; naive dimensions reported";
    emit(out, j);
  } else {
    out << "dim H^" << deg << " = " << r.dim;
    if (r.windowed) out << "  (windowed, window " << r.window << ")";
    out << "\n";
    out << "stability: " << (stable ? "stable" : "truncation-sensitive") << "\n";
    if (!r.reliable)
      out << "caveat: window degenerate at this truncation; naive dimensions reported\n";
    for (const GradedPolynomial& rep : r.representatives)
      out << "representative: " << rep.str() << "\n";
  }
  return 0;
}

int cmd_linearize(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  LinearComplexReport r = linearization(field(p, "delta", "Q"));
  if (o.structured()) {
    json basis = json::array(), levels = json::array(), maps = json::array();
    json ranks = json::array(), dims = json::array();
    for (const Monomial& m : r.algebra_basis) basis.push_back(to_string(p.ctx, m));
    for (const auto& level : r.level_vars) {
      json names = json::array();
      for (int i : level) names.push_back(p.ctx.name(i));
      levels.push_back(names);
    }
    for (const QMatrix& m : r.maps) maps.push_back(jparse(matrix_json(m)));
    for (int x : r.ranks) ranks.push_back(x);
    for (int x : r.homology_dims) dims.push_back(x);
    emit(out, json{{"op", "linearize"},
                   {"algebra_dim", r.algebra_dim},
                   {"algebra_basis", basis},
                   {"levels", levels},
                   {"maps", maps},
                   {"ranks", ranks},
                   {"homology_dims", dims}});
  } else {
    out << "algebra dimension: " << r.algebra_dim << "\n";
    for (size_t k = 0; k < r.level_vars.size(); ++k) {
      out << "level " << k << ":";
      for (int i : r.level_vars[k]) out << ' ' << p.ctx.name(i);
      out << "\n";
    }
    out << "ranks:";
    for (int x : r.ranks) out << ' ' << x;
    out << "\nhomology dimensions:";
    for (int x : r.homology_dims) out << ' ' << x;
    out << "\n";
  }
  return 0;
}

int cmd_lift(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  Derivation lifted = lift_derivation(field(p, "delta"), field(p, "vf"));
  if (o.structured()) {
    emit(out, json{{"op", "lift"}, {"field", jparse(derivation_json(lifted))}});
  } else {
    print_values(out, "X", lifted);
    out << "commutes with delta: yes\n";
  }
  return 0;
}

int cmd_assemble(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  TildeDelta t = assemble_tilde_delta(nonpositive_restriction(field(p, "delta")),
                                      nonnegative_restriction(field(p, "qplus")));
  if (o.structured()) {
    emit(out, json{{"op", "assemble"},
                   {"context", jparse(context_json(t.ctx))},
                   {"delta_tilde", jparse(derivation_json(t.delta_tilde))},
                   {"q_part", jparse(derivation_json(t.q_part))}});
  } else {
    print_chart(out, t.ctx);
    print_values(out, "delta~", t.delta_tilde);
  }
  return 0;
}

int cmd_perturb(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  ConstructQResult r = construct_q(nonpositive_restriction(field(p, "delta")),
                                   nonnegative_restriction(field(p, "qplus")));
  if (o.structured()) {
    json corrections = json::array();
    for (const Derivation& c : r.corrections)
      corrections.push_back(jparse(derivation_json(c)));
    emit(out, json{{"op", "perturb"},
                   {"context", jparse(context_json(r.assembled.ctx))},
                   {"q", jparse(derivation_json(r.q))},
                   {"corrections", corrections}});
  } else {
    print_chart(out, r.assembled.ctx);
    print_values(out, "Q", r.q);
    out << "corrections: " << r.corrections.size() << "\n";
    out << "square-zero: yes\n";
  }
  return 0;
}

int cmd_intertwine(const Options& o, std::ostream& out) {
  ProblemFile p = load(o);
  const Derivation& q = field(p, "Q");
  const Derivation& qp = field(p, "Qprime");
  IntertwineResult r = intertwine(q, qp);
  write_log_file(o, r.log);
  bool carries = r.log.push_forward(q.transferred(r.log.context())).transferred(p.ctx) == qp;
  if (o.structured()) {
    emit(out, json{{"op", "intertwine"},
                   {"steps", r.log.steps().size()},
                   {"verified", carries},
                   {"flow_log", jparse(flowlog_json(r.log))}});
  } else {
    out << "flow steps: " << r.log.steps().size() << "\n";
    for (const FlowStep& s : r.log.steps())
      out << "step: gain " << s.gain << ", " << s.label << "\n";
    out << "carries Q to Qprime: " << (carries ? "yes" : "no") << "\n";
    out << "flow-log: " << flowlog_json(r.log) << "\n";
  }
  return carries ? 0 : 1;
}

int cmd_replay(const Options& o, std::ostream& out) {
  if (o.log_path.empty()) throw UsageError("replay needs --log FILE");
  FlowLog log = flowlog_from_json(slurp(o.log_path));
  ProblemFile p = load(o);
  const Derivation& q = field(p, "Q", "delta");
  Derivation moved = log.push_forward(q.transferred(log.context())).transferred(p.ctx);
  if (o.structured()) {
    emit(out, json{{"op", "replay"}, {"field", jparse(derivation_json(moved))}});
  } else {
    print_values(out, "Q", moved);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symbolic engine for truncated graded Q-manifolds"};
  app.name("gradedq");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  struct Entry {
    const char* name;
    const char* help;
    int (*handler)(const Options&, std::ostream&);
  };
  const Entry entries[] = {
      {"check", "verify that the field squares to zero", cmd_check},
      {"curvature", "curvature functions generating the zero-locus ideal", cmd_curvature},
      {"negative-part", "restrict to the nonpositive variables", cmd_negative_part},
      {"zero-locus", "differential graded algebra of the zero locus", cmd_zero_locus},
      {"anchor", "linear anchor map at the origin and its rank", cmd_anchor},
      {"trivialize", "flow a unit-curvature field to its interior-product form", cmd_trivialize},
      {"homotopy", "contracting homotopy of a trivialized field", cmd_homotopy},
      {"split", "split off contractible pairs at a regular point", cmd_split},
      {"kt-build", "build a Koszul-Tate resolution of the ideal", cmd_kt_build},
      {"kt-verify", "check that a field is a Koszul-Tate resolution", cmd_kt_verify},
      {"kt-cohomology", "cohomology of the complex (or, with --vf, of vector fields)",
       cmd_kt_cohomology},
      {"linearize", "linear strand of a resolution and its homology", cmd_linearize},
      {"lift", "lift a base vector field through a resolution", cmd_lift},
      {"assemble", "join a resolution with a zero-locus differential", cmd_assemble},
      {"perturb", "construct a flat extension by staged corrections", cmd_perturb},
      {"intertwine", "flow carrying one flat extension onto another", cmd_intertwine},
      {"replay", "apply a saved flow log to the field of a problem file", cmd_replay},
  };
  for (const Entry& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    add_common(cmd, o);
    std::string name = e.name;
    if (name == "kt-cohomology") {
      cmd->add_flag("--vf", o.vf, "cohomology of vector fields instead of the complex");
      cmd->add_option("--degree", o.degree, "total degree of the cohomology group");
      cmd->add_option("--negdeg", o.negdeg, "negative of the total degree");
    }
    if (name == "trivialize" || name == "split" || name == "intertwine")
      cmd->add_option("--emit-log", o.emit_log, "also write the flow log to this file");
    if (name == "kt-build")
      cmd->add_option("--depth", o.depth, "deepest generator degree to adjoin");
    if (name == "replay")
      cmd->add_option("--log", o.log_path, "flow log file produced by a transformation command");
    auto handler = e.handler;
    cmd->callback([&action, &o, &out, handler] {
      action = [&o, &out, handler] { return handler(o, out); };
    });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!action) return 2;

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gradedq::cli
