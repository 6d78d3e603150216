#include "gradedq/qmanifold.hpp"

#include "gradedq/basis.hpp"
#include "gradedq/errors.hpp"

namespace gradedq {

namespace {

void require_degree_one(const Derivation& q) {
  if (q.degree() != 1) throw UsageError("expected a derivation of total degree 1");
}

// Splits v into (graded factor) x (base coefficient) blocks, reduces each
// coefficient modulo the ideal span and recombines. Base variables are even,
// so the split carries no sign.
GradedPolynomial reduce_blocks(const Context& ctx, const GradedPolynomial& v,
                               const RowSpan& ideal_span, const std::vector<Monomial>& jets,
                               const std::map<Monomial, int>& jet_index) {
  if (v.is_zero()) return v;
  std::map<Monomial, GradedPolynomial> blocks;  // graded factor -> base coefficient
  for (const auto& [m, c] : v.terms()) {
    Monomial graded = m, base = m;
    for (int j = 0; j < ctx.size(); ++j) {
      if (ctx.is_base(j))
        graded.exponents[static_cast<size_t>(j)] = 0;
      else
        base.exponents[static_cast<size_t>(j)] = 0;
    }
    auto [it, fresh] = blocks.try_emplace(graded, GradedPolynomial::zero(ctx));
    (void)fresh;
    it->second.add_term(base, c);
  }
  GradedPolynomial reduced = GradedPolynomial::zero(ctx);
  for (const auto& [graded, coeff] : blocks) {
    QVector vec = ideal_span.reduce(coordinates(coeff, jet_index, static_cast<int>(jets.size())));
    GradedPolynomial rc = from_coordinates(ctx, jets, vec);
    reduced += GradedPolynomial::monomial(ctx, graded, 1) * rc;
  }
  return reduced;
}

}  // namespace

QCheck check_q(const Derivation& q) {
  require_degree_one(q);
  QCheck out{true, Derivation::zero(q.context(), 2)};
  const Context& ctx = q.context();
  for (int i = 0; i < ctx.size(); ++i) {
    out.square.set_value(i, q.apply(q.value(i)));
  }
  out.ok = out.square.is_zero();
  return out;
}

std::vector<std::pair<int, GradedPolynomial>> curvature(const Derivation& q) {
  require_degree_one(q);
  const Context& ctx = q.context();
  std::vector<std::pair<int, GradedPolynomial>> out;
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.degree(i) == -1) out.emplace_back(i, q.value(i).base_projection());
  }
  return out;
}

NegativePart negative_part(const Derivation& q) {
  require_degree_one(q);
  const Context& ctx = q.context();
  std::vector<bool> keep(static_cast<size_t>(ctx.size()));
  NegativePart out{Context(), Derivation::zero(ctx, 1), {}};
  for (int i = 0; i < ctx.size(); ++i) {
    keep[static_cast<size_t>(i)] = ctx.degree(i) <= 0;
    if (keep[static_cast<size_t>(i)]) out.kept.push_back(i);
  }
  out.ctx = ctx.restricted(keep);
  Derivation trimmed = Derivation::zero(ctx, 1);
  for (int i : out.kept) trimmed.set_value(i, q.value(i).positive_to_zero());
  out.q = trimmed.transferred(out.ctx);
  return out;
}

ZeroLocusDGA zero_locus_dga(const Derivation& q) {
  require_degree_one(q);
  const Context& ctx = q.context();
  std::vector<bool> keep(static_cast<size_t>(ctx.size()));
  for (int i = 0; i < ctx.size(); ++i) keep[static_cast<size_t>(i)] = ctx.degree(i) >= 0;

  ZeroLocusDGA out;
  out.ctx = ctx.restricted(keep);

  const std::vector<Monomial> jets = base_monomials(out.ctx);
  const std::map<Monomial, int> jet_index = index_of(jets);
  RowSpan ideal_span(static_cast<int>(jets.size()));
  for (const auto& [var, f] : curvature(q)) {
    (void)var;
    if (f.is_zero()) continue;
    GradedPolynomial gen = GradedPolynomial::transferred(f, out.ctx);
    out.ideal.push_back(gen);
    if (gen.constant_term() != 0) out.origin_on_zero_locus = false;
    for (const Monomial& m : jets) {
      GradedPolynomial prod = GradedPolynomial::monomial(out.ctx, m, 1) * gen;
      if (!prod.is_zero())
        ideal_span.insert(coordinates(prod, jet_index, static_cast<int>(jets.size())));
    }
  }
  out.algebra_dim = static_cast<int>(jets.size()) - ideal_span.rank();

  // Reduce each coefficient block of the filtration-degree-zero part of q
  // modulo the ideal, one positive-monomial factor at a time.
  Derivation induced = Derivation::zero(out.ctx, 1);
  const Derivation q0 = q.negdeg_component(0).transferred(out.ctx);
  for (int t = 0; t < out.ctx.size(); ++t) {
    if (q0.value(t).is_zero()) continue;
    induced.set_value(t, reduce_blocks(out.ctx, q0.value(t), ideal_span, jets, jet_index));
  }
  out.differential = induced;
  return out;
}

GradedPolynomial ideal_reduced(const GradedPolynomial& p,
                               const std::vector<GradedPolynomial>& gens) {
  const Context& ctx = p.context();
  const std::vector<Monomial> jets = base_monomials(ctx);
  const std::map<Monomial, int> jet_index = index_of(jets);
  RowSpan span(static_cast<int>(jets.size()));
  for (const auto& g : gens) {
    if (!(g.context() == ctx)) throw UsageError("ideal generator lives on a different chart");
    if (!(g.base_projection() == g)) throw UsageError("ideal generators must be base polynomials");
    for (const Monomial& m : jets) {
      GradedPolynomial prod = GradedPolynomial::monomial(ctx, m, 1) * g;
      if (!prod.is_zero()) span.insert(coordinates(prod, jet_index, static_cast<int>(jets.size())));
    }
  }
  return reduce_blocks(ctx, p, span, jets, jet_index);
}

AnchorReport anchor(const Derivation& q) {
  require_degree_one(q);
  const Context& ctx = q.context();
  AnchorReport out;
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.is_base(i)) out.rows.push_back(i);
    if (ctx.degree(i) == 1) out.cols.push_back(i);
  }
  out.matrix = QMatrix(static_cast<int>(out.rows.size()), static_cast<int>(out.cols.size()));
  for (size_t r = 0; r < out.rows.size(); ++r) {
    const GradedPolynomial& v = q.value(out.rows[r]);
    for (size_t c = 0; c < out.cols.size(); ++c) {
      out.matrix.at(static_cast<int>(r), static_cast<int>(c)) =
          v.derivative(out.cols[c]).constant_term();
    }
  }
  out.rank = rank(out.matrix);
  for (const auto& [var, f] : curvature(q)) {
    (void)var;
    if (f.constant_term() != 0) out.origin_on_zero_locus = false;
  }
  return out;
}

}  // namespace gradedq
