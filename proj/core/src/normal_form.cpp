#include "gradedq/normal_form.hpp"

#include <cassert>
#include <string>

#include "gradedq/errors.hpp"

namespace gradedq {

namespace {

// Order measure driving the flow-box iteration: total exponent weight of a
// monomial, additive under multiplication.
int order_measure(const Context& ctx, const Monomial& m) {
  return base_degree(ctx, m) + positive_degree(ctx, m) + negative_degree(ctx, m);
}

// Component of x spanned by terms c d/dz with order_measure(c) - weight(z) = d.
Derivation order_component(const Derivation& x, int d) {
  const Context& ctx = x.context();
  Derivation out = Derivation::zero(ctx, x.degree());
  for (int i = 0; i < ctx.size(); ++i) {
    GradedPolynomial kept = GradedPolynomial::zero(ctx);
    for (const auto& [m, c] : x.value(i).terms()) {
      if (order_measure(ctx, m) - ctx.weight(i) == d) kept.add_term(m, c);
    }
    if (!kept.is_zero()) out.set_value(i, kept);
  }
  return out;
}

// Terms whose coefficient has base degree <= jet; the rest only exists
// because the computation runs one jet order above the caller.
GradedPolynomial jet_visible(const GradedPolynomial& p, int jet) {
  GradedPolynomial out = GradedPolynomial::zero(p.context());
  for (const auto& [m, c] : p.terms()) {
    if (base_degree(p.context(), m) <= jet) out.add_term(m, c);
  }
  return out;
}

Derivation jet_visible(const Derivation& x, int jet) {
  Derivation out = Derivation::zero(x.context(), x.degree());
  for (int i = 0; i < x.context().size(); ++i) {
    GradedPolynomial v = jet_visible(x.value(i), jet);
    if (!v.is_zero()) out.set_value(i, v);
  }
  return out;
}

// Antiderivative along a base direction: y^e m -> y^{e+1} m / (e+1). Exact
// because the pivot variable is even.
GradedPolynomial pivot_antiderivative(const GradedPolynomial& p, int pivot) {
  GradedPolynomial out = GradedPolynomial::zero(p.context());
  for (const auto& [m, c] : p.terms()) {
    Monomial bumped = m;
    const long e = static_cast<long>(bumped.exponents[static_cast<size_t>(pivot)]);
    bumped.exponents[static_cast<size_t>(pivot)] = static_cast<uint32_t>(e + 1);
    out.add_term(bumped, c / Rational(e + 1));
  }
  return out;
}

Rational constant_of(const Derivation& v, int var) { return v.value(var).constant_term(); }

// One shear step exp(c * source d/dtarget), appended and applied to v.
void shear(FlowLog& log, Derivation& v, int target, int source, const Rational& c,
           const std::string& label) {
  const Context& ctx = v.context();
  Derivation gen = Derivation::zero(ctx, 0);
  gen.set_value(target, c * GradedPolynomial::variable(ctx, source));
  log.append(gen, gen.min_negdeg(), label);
  v = push_forward(gen, v);
}

// Flow-box normalization in the (already jet-extended) context of v: appends
// generators to log and mutates v until its visible part is exactly
// d/d(pivot). Directions marked in `avoid` must stay untouched; generators
// never involve them.
void straighten_core(Derivation& v, int pivot, int visible_jet, const std::vector<bool>& avoid,
                     FlowLog& log, const std::string& label) {
  const Context& ctx = v.context();
  if (v.degree() != 0 && !v.is_zero())
    throw UsageError("straightening expects a degree-0 vector field");
  if (!ctx.is_base(pivot)) throw UsageError("straightening pivot must be a base variable");

  // Stage A: normalize the constant part to exactly d/d(pivot).
  Rational a = constant_of(v, pivot);
  if (a == 0) throw MathError("pivot coefficient vanishes at the origin");
  if (a != 1) {
    int second = -1;
    for (int i = 0; i < ctx.size(); ++i) {
      if (i != pivot && ctx.is_base(i) && !avoid[static_cast<size_t>(i)]) {
        second = i;
        break;
      }
    }
    if (second < 0)
      throw MathError(
          "pivot coefficient is not 1 and no second base variable is available "
          "to normalize it");
    // Shear factorization of diag(1/a, a) on the (pivot, second) coefficient
    // pair; E12(m) acts as exp(-m second d/dpivot), E21(m) as
    // exp(-m pivot d/dsecond), applied first entry first.
    const Rational lam = 1 / a;
    const std::string slabel = label + ":shear:scale";
    shear(log, v, pivot, second, Rational(1), slabel);
    shear(log, v, second, pivot, Rational(-1), slabel);
    shear(log, v, pivot, second, Rational(1), slabel);
    shear(log, v, pivot, second, -lam, slabel);
    shear(log, v, second, pivot, 1 / lam, slabel);
    shear(log, v, pivot, second, -lam, slabel);
    if (constant_of(v, pivot) != 1) throw MathError("shear normalization failed");
  }
  for (int i = 0; i < ctx.size(); ++i) {
    if (i == pivot || !ctx.is_base(i)) continue;
    const Rational c = constant_of(v, i);
    if (c == 0) continue;
    if (avoid[static_cast<size_t>(i)])
      throw MathError("constant coefficient on a protected direction");
    shear(log, v, i, pivot, c, label + ":shear:const");
    if (constant_of(v, i) != 0 || constant_of(v, pivot) != 1)
      throw MathError("constant elimination failed");
  }

  // Stage B: integrate away the positive-order levels, lowest first. Each
  // level-d part is cancelled by the flow of its pivot antiderivative (order
  // d+1); corrections land strictly above level d.
  int maxw = 1;
  for (int i = 0; i < ctx.size(); ++i) maxw = std::max(maxw, ctx.weight(i));
  const int budget = visible_jet + 2 * ctx.filtration_order() + 2 * maxw + 9;
  for (int d = 0; d <= budget; ++d) {
    Derivation residual = v;
    residual.set_value(pivot, v.value(pivot) - GradedPolynomial::constant(ctx, 1));
    residual = jet_visible(residual, visible_jet);
    if (residual.is_zero()) return;
    Derivation level = order_component(residual, d);
    if (level.is_zero()) continue;
    Derivation gen = Derivation::zero(ctx, 0);
    for (int i = 0; i < ctx.size(); ++i) {
      if (level.value(i).is_zero()) continue;
      if (avoid[static_cast<size_t>(i)])
        throw MathError("straightening would disturb a protected direction");
      gen.set_value(i, pivot_antiderivative(level.value(i), pivot));
    }
    log.append(gen, gen.min_negdeg(), label + ":level:" + std::to_string(d));
    v = push_forward(gen, v);
    Derivation after = v;
    after.set_value(pivot, v.value(pivot) - GradedPolynomial::constant(ctx, 1));
    after = jet_visible(after, visible_jet);
    for (int k = 0; k <= d; ++k) {
      if (!order_component(after, k).is_zero())
        throw MathError("straightening cancellation failed at level " + std::to_string(k));
    }
  }
  throw MathError("straightening does not terminate at this truncation");
}

Derivation replay_onto(const FlowLog& log, size_t from, Derivation x) {
  for (size_t k = from; k < log.steps().size(); ++k) {
    x = push_forward(log.steps()[k].generator, x);
  }
  return x;
}

}  // namespace

std::pair<int, GradedPolynomial> homotopy_alpha(const Derivation& q) {
  if (q.degree() != 1) throw UsageError("expected a derivation of total degree 1");
  const Context& ctx = q.context();
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.degree(i) != -1) continue;
    GradedPolynomial kappa = q.value(i).base_projection();
    if (kappa.constant_term() != 0) {
      return {i, inverted(kappa) * GradedPolynomial::variable(ctx, i)};
    }
  }
  throw MathError("no degree -1 variable has curvature invertible at the origin");
}

TrivializeResult trivialize(const Derivation& q) {
  const Context& ctx = q.context();
  if (!check_q(q).ok) throw MathError("the field does not square to zero");
  auto [pivot, alpha_in] = homotopy_alpha(q);

  const Context ext = ctx.with_orders(ctx.jet_order() + 1, ctx.filtration_order());
  const int jet = ctx.jet_order();
  const int filt = ctx.filtration_order();
  Derivation cur = q.transferred(ext);
  auto [pivot_ext, alpha] = homotopy_alpha(cur);
  assert(pivot_ext == pivot);
  FlowLog log(ext);

  // Stage 1: ascending filtration levels. alpha * (level-n part) generates a
  // flow cancelling that level exactly; levels below n stay zero.
  for (int n = 0; n < filt; ++n) {
    Derivation comp = jet_visible(cur.negdeg_component(n), jet);
    if (comp.is_zero()) continue;
    Derivation gen = scaled(alpha, comp);
    log.append(gen, gen.min_negdeg(), "trivialize:filtration:" + std::to_string(n));
    cur = push_forward(gen, cur);
    for (int k = 0; k <= n; ++k) {
      if (!jet_visible(cur.negdeg_component(k), jet).is_zero())
        throw MathError("filtration cancellation failed at level " + std::to_string(k));
    }
  }

  // Stage 2: ascending arity levels of the remaining filtration -1 part,
  // down to the pure interior product.
  for (int k = 0; k + 1 < filt; ++k) {
    Derivation comp = jet_visible(cur.negdeg_component(-1).arity_component(k), jet);
    if (comp.is_zero()) continue;
    Derivation gen = scaled(alpha, comp);
    log.append(gen, gen.min_negdeg(), "trivialize:arity:" + std::to_string(k));
    cur = push_forward(gen, cur);
    for (int l = 0; l <= k; ++l) {
      if (!jet_visible(cur.negdeg_component(-1).arity_component(l), jet).is_zero())
        throw MathError("arity cancellation failed at level " + std::to_string(l));
    }
    for (int m = 0; m < filt; ++m) {
      if (!jet_visible(cur.negdeg_component(m), jet).is_zero())
        throw MathError("arity stage disturbed filtration level " + std::to_string(m));
    }
  }

  TrivializeResult out{Derivation(), FlowLog(ext), ChartAutomorphism::identity(ext),
                       alpha_in, pivot};
  out.final_q = cur.transferred(ctx);
  if (!(out.final_q == out.final_q.arity_component(-1)))
    throw MathError("trivialization incomplete: residual arity components remain");
  const auto kin = curvature(q);
  const auto kout = curvature(out.final_q);
  assert(kin.size() == kout.size());
  for (size_t i = 0; i < kin.size(); ++i) {
    if (!(kin[i].first == kout[i].first && kin[i].second == kout[i].second))
      throw MathError("trivialization failed to preserve the curvature");
  }
  if (!check_q(out.final_q).ok) throw MathError("trivialized field does not square to zero");
  out.log = log;
  out.substitution = log.inverse().automorphism();
  return out;
}

GradedPolynomial contracting_homotopy(const Derivation& q) {
  if (q.degree() != 1) throw UsageError("expected a derivation of total degree 1");
  if (!(q == q.arity_component(-1)))
    throw MathError("not an interior-product model: arity components above -1 remain");
  if (!check_q(q).ok) throw MathError("the field does not square to zero");
  auto [pivot, alpha] = homotopy_alpha(q);
  (void)pivot;
  if (!(q.apply(alpha) == GradedPolynomial::constant(q.context(), 1)))
    throw MathError("contraction potential is not normalized");
  return alpha;
}

StraightenResult straighten(const Derivation& v, int pivot_var) {
  const Context& ctx = v.context();
  if (v.degree() != 0 && !v.is_zero())
    throw UsageError("straightening expects a degree-0 vector field");
  int pivot = pivot_var;
  if (pivot < 0) {
    for (int i = 0; i < ctx.size(); ++i) {
      if (ctx.is_base(i) && constant_of(v, i) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0)
      throw MathError("no base direction has a nonzero constant coefficient");
  } else if (pivot >= ctx.size() || !ctx.is_base(pivot)) {
    throw UsageError("straightening pivot must be a base variable");
  }

  const Context ext = ctx.with_orders(ctx.jet_order() + 1, ctx.filtration_order());
  Derivation cur = v.transferred(ext);
  FlowLog log(ext);
  std::vector<bool> avoid(static_cast<size_t>(ext.size()), false);
  straighten_core(cur, pivot, ctx.jet_order(), avoid, log, "straighten");

  StraightenResult out{cur.transferred(ctx), log, pivot};
  if (!(out.straightened == Derivation::partial(ctx, pivot)))
    throw MathError("straightening failed to reach the coordinate field");
  return out;
}

SplitResult split_at_point(const Derivation& q) {
  const Context& ctx = q.context();
  if (!check_q(q).ok) throw MathError("the field does not square to zero");
  const AnchorReport input_anchor = anchor(q);

  const Context ext = ctx.with_orders(ctx.jet_order() + 1, ctx.filtration_order());
  const int jet = ctx.jet_order();
  Derivation cur = q.transferred(ext);
  FlowLog log(ext);
  std::vector<bool> avoid(static_cast<size_t>(ext.size()), false);
  std::vector<SplitPair> pairs;

  for (;;) {
    // Deterministic pivot: first unused fiber column, first unused base row
    // with a nonzero anchor entry.
    const AnchorReport ar = anchor(cur);
    int pr = -1, pc = -1;
    for (size_t c = 0; c < ar.cols.size() && pr < 0; ++c) {
      if (avoid[static_cast<size_t>(ar.cols[c])]) continue;
      for (size_t r = 0; r < ar.rows.size(); ++r) {
        if (avoid[static_cast<size_t>(ar.rows[r])]) continue;
        if (ar.matrix.at(static_cast<int>(r), static_cast<int>(c)) != 0) {
          pr = ar.rows[r];
          pc = ar.cols[c];
          break;
        }
      }
    }
    if (pr < 0) break;
    const int y = pr, theta = pc;
    const std::string plabel =
        "split:" + ext.name(y) + ":" + ext.name(theta);

    // First flow-box: straighten [q, d/dtheta] to d/dy.
    Derivation v = commutator(cur, Derivation::partial(ext, theta));
    size_t mark = log.steps().size();
    straighten_core(v, y, jet, avoid, log, plabel + ":contract");
    cur = replay_onto(log, mark, cur);

    // The image of y now meets theta with coefficient 1 up to terms invisible
    // at the original jet order; the replacement flow below absorbs it
    // exactly, with exact postconditions of its own.
    GradedPolynomial tau = cur.value(y);
    if (!jet_visible(tau.derivative(theta) - GradedPolynomial::constant(ext, 1), jet)
             .is_zero())
      throw MathError("split: fiber coefficient is not a unit after straightening");
    GradedPolynomial h = GradedPolynomial::zero(ext);
    const GradedPolynomial theta_poly = GradedPolynomial::variable(ext, theta);
    bool converged = false;
    for (int it = 0; it <= flow_budget(ext); ++it) {
      Derivation u = Derivation::zero(ext, 0);
      u.set_value(theta, h);
      GradedPolynomial r = tau - exp_flow(u).image(theta);
      if (r.is_zero()) {
        converged = true;
        Derivation gen = Derivation::zero(ext, 0);
        gen.set_value(theta, -1 * h);
        log.append(gen, gen.min_negdeg(), plabel + ":replace");
        cur = push_forward(gen, cur);
        break;
      }
      h += r;
    }
    if (!converged) throw MathError("split: fiber substitution did not converge");
    if (!(cur.value(y) == theta_poly))
      throw MathError("split: fiber replacement failed");
    if (!jet_visible(cur.value(theta), jet).is_zero())
      throw MathError("split: fiber image of the pair is not closed");

    // Second flow-box: straighten the theta-coefficient field, fixing the
    // pair found so far.
    Derivation d = commutator(cur, Derivation::partial(ext, theta));
    mark = log.steps().size();
    straighten_core(d, y, jet, avoid, log, plabel + ":decouple");
    cur = replay_onto(log, mark, cur);
    if (!(cur.value(y) == theta_poly))
      throw MathError("split: decoupling disturbed the pair");
    Derivation check = commutator(cur, Derivation::partial(ext, theta));
    check.set_value(y, check.value(y) - GradedPolynomial::constant(ext, 1));
    if (!jet_visible(check, jet).is_zero())
      throw MathError("split: pair is not fully decoupled");

    avoid[static_cast<size_t>(y)] = true;
    avoid[static_cast<size_t>(theta)] = true;
    pairs.push_back(SplitPair{y, theta});
  }

  SplitResult out;
  out.pairs = pairs;
  out.log = log;
  out.anchor_rank = input_anchor.rank;
  out.final_q = cur.transferred(ctx);
  Derivation res = cur;
  for (const SplitPair& p : pairs) {
    res.set_value(p.base_var,
                  res.value(p.base_var) - GradedPolynomial::variable(ext, p.fiber_var));
  }
  out.residual = res.transferred(ctx);

  if (static_cast<int>(pairs.size()) != input_anchor.rank)
    throw MathError("split: extracted pair count does not match the anchor rank");
  for (const SplitPair& p : pairs) {
    if (!(out.final_q.value(p.base_var) == GradedPolynomial::variable(ctx, p.fiber_var)))
      throw MathError("split: pair term lost under truncation");
    if (!out.residual.value(p.base_var).is_zero() || !out.residual.value(p.fiber_var).is_zero())
      throw MathError("split: residual touches a pair variable");
  }
  for (int i = 0; i < ctx.size(); ++i) {
    for (const auto& [m, c] : out.residual.value(i).terms()) {
      (void)c;
      for (const SplitPair& p : pairs) {
        if (m.exponents[static_cast<size_t>(p.base_var)] != 0 ||
            m.exponents[static_cast<size_t>(p.fiber_var)] != 0)
          throw MathError("split: residual coefficients involve a pair variable");
      }
    }
  }
  if (!check_q(out.residual).ok)
    throw MathError("split: residual does not square to zero at this truncation");
  if (anchor(out.residual).rank != 0)
    throw MathError("split: residual still has anchor rank");
  return out;
}

}  // namespace gradedq
