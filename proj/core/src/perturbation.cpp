#include "gradedq/perturbation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <utility>

#include "gradedq/basis.hpp"
#include "gradedq/errors.hpp"

namespace gradedq {
namespace {

std::vector<Monomial> filtered_basis(const Context& ctx, int degree, int neg) {
  std::vector<Monomial> out;
  for (const auto& m : monomial_basis(ctx, degree))
    if (negative_degree(ctx, m) == neg) out.push_back(m);
  return out;
}

// Coefficient-of-partial terms of one total degree and one filtration degree.
std::vector<DerivationTerm> filtered_terms(const Context& ctx, int degree, int negdeg) {
  std::vector<DerivationTerm> out;
  for (const auto& t : derivation_term_basis(ctx, degree))
    if (negative_degree(ctx, t.mono) - ctx.neg_degree(t.var) == negdeg) out.push_back(t);
  return out;
}

Derivation term_derivation(const Context& ctx, const DerivationTerm& t, int degree) {
  Derivation d = Derivation::zero(ctx, degree);
  d.set_value(t.var, GradedPolynomial::monomial(ctx, t.mono, Rational(1)));
  return d;
}

std::map<std::pair<int, Monomial>, int> term_index(const std::vector<DerivationTerm>& terms) {
  std::map<std::pair<int, Monomial>, int> idx;
  for (size_t i = 0; i < terms.size(); ++i)
    idx.emplace(std::make_pair(terms[i].var, terms[i].mono), static_cast<int>(i));
  return idx;
}

QVector flatten(const Derivation& d, const std::map<std::pair<int, Monomial>, int>& idx, int dim) {
  QVector v(static_cast<size_t>(dim), Rational(0));
  const Context& ctx = d.context();
  for (int i = 0; i < ctx.size(); ++i)
    for (const auto& [m, c] : d.value(i).terms()) {
      auto it = idx.find(std::make_pair(i, m));
      assert(it != idx.end());
      v[static_cast<size_t>(it->second)] = c;
    }
  return v;
}

// Solves [dmin, u] = rhs for u of the given total and filtration degree.
// Returns the zero derivation when rhs vanishes; nullopt when obstructed.
std::optional<Derivation> solve_adjoint(const Derivation& dmin, const Derivation& rhs, int degree,
                                        int negdeg) {
  const Context& ctx = dmin.context();
  std::vector<DerivationTerm> unknowns = filtered_terms(ctx, degree, negdeg);
  std::vector<DerivationTerm> equations = filtered_terms(ctx, degree + 1, negdeg - 1);
  auto eq_idx = term_index(equations);
  const int neq = static_cast<int>(equations.size());
  QMatrix mat(neq, static_cast<int>(unknowns.size()));
  for (int j = 0; j < static_cast<int>(unknowns.size()); ++j) {
    Derivation col = commutator(dmin, term_derivation(ctx, unknowns[j], degree));
    QVector v = flatten(col, eq_idx, neq);
    for (int i = 0; i < neq; ++i) mat.at(i, j) = v[i];
  }
  std::optional<QVector> sol = solve(mat, flatten(rhs, eq_idx, neq));
  if (!sol) return std::nullopt;
  Derivation u = Derivation::zero(ctx, degree);
  for (int j = 0; j < static_cast<int>(unknowns.size()); ++j)
    if ((*sol)[static_cast<size_t>(j)] != 0)
      u += (*sol)[static_cast<size_t>(j)] * term_derivation(ctx, unknowns[j], degree);
  return u;
}

}  // namespace

TildeDelta assemble_tilde_delta(const Derivation& delta, const Derivation& qplus) {
  const Context& nctx = delta.context();
  const Context& pctx = qplus.context();
  if (delta.degree() != 1 || qplus.degree() != 1)
    throw UsageError("both differentials must have total degree 1");
  if (!check_q(delta).ok) throw MathError("resolution differential does not square to zero");

  int depth = 0;
  for (int i = 0; i < nctx.size(); ++i) {
    if (nctx.pos_degree(i) > 0)
      throw UsageError("the resolution chart must contain no positive variables");
    if (nctx.degree(i) >= 0 && !delta.value(i).is_zero())
      throw UsageError("the resolution differential must vanish on the base");
    depth = std::max(depth, nctx.neg_degree(i));
  }
  if (nctx.jet_order() != pctx.jet_order() || nctx.filtration_order() != pctx.filtration_order())
    throw UsageError("charts disagree on truncation orders");

  // The nonnegative chart must start with the shared base block, in order,
  // followed only by positive variables.
  std::vector<VarDecl> base_block;
  for (int i = 0; i < nctx.size(); ++i)
    if (nctx.is_base(i)) base_block.push_back(nctx.var(i));
  if (pctx.size() < static_cast<int>(base_block.size()))
    throw UsageError("charts disagree on the base variables");
  std::vector<VarDecl> positives;
  for (int j = 0; j < pctx.size(); ++j) {
    if (j < static_cast<int>(base_block.size())) {
      if (!(pctx.var(j) == base_block[static_cast<size_t>(j)]))
        throw UsageError("the nonnegative chart must list the shared base block first");
    } else if (pctx.degree(j) <= 0) {
      throw UsageError("the nonnegative chart must list the shared base block first");
    } else {
      positives.push_back(pctx.var(j));
    }
  }

  // The zero-locus structure must square to zero modulo the curvature ideal.
  std::vector<GradedPolynomial> ideal;
  for (const auto& [var, f] : curvature(delta)) {
    (void)var;
    if (!f.is_zero()) ideal.push_back(GradedPolynomial::transferred(f, pctx));
  }
  Derivation psq = check_q(qplus).square;
  for (int j = 0; j < pctx.size(); ++j)
    if (!ideal_reduced(psq.value(j), ideal).is_zero())
      throw MathError("zero-locus differential fails to square to zero modulo the ideal");

  Context ctx = nctx.extended(positives);
  Derivation dres = delta.transferred(ctx);
  Derivation q0 = Derivation::zero(ctx, 1);
  for (int j = 0; j < pctx.size(); ++j) {
    if (qplus.value(j).is_zero()) continue;
    int t = *ctx.index_of(pctx.name(j));
    q0.set_value(t, GradedPolynomial::transferred(qplus.value(j), ctx));
  }

  // Values on the negative generators, solved shallowest level first:
  // anticommutation demands delta(q0(v)) = -q0(delta(v)), and the right side
  // only involves levels already lifted. Unknowns keep filtration degree
  // equal to the generator's, so the lift stays at filtration degree zero.
  for (int k = 1; k <= depth; ++k) {
    std::vector<Monomial> dom = filtered_basis(ctx, -k + 1, k);
    std::vector<Monomial> cod = filtered_basis(ctx, -k + 2, k - 1);
    std::map<Monomial, int> cod_index = index_of(cod);
    const int ncod = static_cast<int>(cod.size());
    QMatrix mat(ncod, static_cast<int>(dom.size()));
    for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
      GradedPolynomial im = dres.apply(GradedPolynomial::monomial(ctx, dom[j], Rational(1)));
      QVector col = coordinates(im, cod_index, ncod);
      for (int i = 0; i < ncod; ++i) mat.at(i, j) = col[i];
    }
    for (int v = 0; v < ctx.size(); ++v) {
      if (ctx.neg_degree(v) != k) continue;
      GradedPolynomial rhs = -q0.apply(dres.value(v));
      std::optional<QVector> sol = solve(mat, coordinates(rhs, cod_index, ncod));
      if (!sol) throw MathError("assembly obstructed at generator " + ctx.name(v));
      q0.set_value(v, from_coordinates(ctx, dom, *sol));
    }
  }
  if (!commutator(dres, q0).is_zero())
    throw MathError("assembled lift fails to anticommute with the resolution differential");

  TildeDelta out;
  out.ctx = ctx;
  out.delta_part = dres;
  out.q_part = q0;
  out.delta_tilde = dres + q0;
  return out;
}

ConstructQResult construct_q(const Derivation& delta, const Derivation& qplus) {
  ConstructQResult out;
  out.assembled = assemble_tilde_delta(delta, qplus);
  const Context& ctx = out.assembled.ctx;
  const int filt = ctx.filtration_order();
  const Derivation& dmin = out.assembled.delta_part;
  Derivation q = out.assembled.delta_tilde;

  for (int m = 0; m + 1 < filt; ++m) {
    Derivation sm = check_q(q).square.negdeg_component(m);
    if (sm.is_zero()) continue;
    if (!commutator(dmin, sm).is_zero())
      throw MathError("defect fails the cocycle identity at filtration level " + std::to_string(m));
    std::optional<Derivation> u = solve_adjoint(dmin, -sm, 1, m + 1);
    if (!u)
      throw MathError("no flat extension: obstruction at filtration level " + std::to_string(m));
    out.corrections.push_back(*u);
    q += *u;
    Derivation after = check_q(q).square;
    for (int l = 0; l <= m; ++l)
      if (!after.negdeg_component(l).is_zero())
        throw MathError("staged correction failed to cancel filtration level " + std::to_string(l));
  }
  if (!check_q(q).ok) throw MathError("no flat extension within the filtration order");

  assert(q.negdeg_component(-1) == out.assembled.delta_part);
  assert(q.negdeg_component(0) == out.assembled.q_part);

  // The finished field must induce the structures it was built from.
  ZeroLocusDGA dga = zero_locus_dga(q);
  const Context& pctx = qplus.context();
  assert(dga.ctx == pctx);
  for (int j = 0; j < pctx.size(); ++j)
    assert(ideal_reduced(qplus.value(j), dga.ideal) == dga.differential.value(j));

  out.q = q;
  return out;
}

IntertwineResult intertwine(const Derivation& q, const Derivation& q_prime) {
  const Context& ctx = q.context();
  if (!(q_prime.context() == ctx)) throw UsageError("the two fields live on different charts");
  if (!check_q(q).ok || !check_q(q_prime).ok)
    throw MathError("both fields must square to zero");
  if (!(q.negdeg_component(-1) == q_prime.negdeg_component(-1)))
    throw MathError("the two fields have different resolution parts");
  {
    ZeroLocusDGA a = zero_locus_dga(q);
    ZeroLocusDGA b = zero_locus_dga(q_prime);
    if (!(a.differential == b.differential))
      throw MathError("the two fields induce different zero-locus structures");
  }

  const int filt = ctx.filtration_order();
  const Derivation dmin = q.negdeg_component(-1);
  IntertwineResult out{FlowLog(ctx)};
  Derivation cur = q;
  for (int i = 0; i + 1 < filt; ++i) {
    Derivation e = (cur - q_prime).negdeg_component(i);
    if (e.is_zero()) continue;
    if (!commutator(dmin, e).is_zero())
      throw MathError("difference fails the cocycle identity at filtration level " +
                      std::to_string(i));
    std::optional<Derivation> w = solve_adjoint(dmin, e, 0, i + 1);
    if (!w)
      throw MathError("no intertwining flow: obstruction at filtration level " +
                      std::to_string(i));
    out.log.append(*w, i + 1, "intertwine:" + std::to_string(i));
    cur = push_forward(*w, cur);
    for (int l = 0; l <= i; ++l)
      if (!(cur - q_prime).negdeg_component(l).is_zero())
        throw MathError("intertwining step failed to match filtration level " + std::to_string(l));
  }
  if (!(cur == q_prime)) throw MathError("no intertwining flow within the filtration order");
  return out;
}

}  // namespace gradedq
