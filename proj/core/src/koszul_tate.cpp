#include "gradedq/koszul_tate.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <utility>

#include "gradedq/basis.hpp"
#include "gradedq/errors.hpp"
#include "gradedq/qmanifold.hpp"

namespace gradedq {
namespace {

std::vector<Monomial> chain_basis(const Context& ctx, int degree, int jet_cap) {
  std::vector<Monomial> out;
  for (const auto& m : monomial_basis(ctx, degree))
    if (base_degree(ctx, m) <= jet_cap) out.push_back(m);
  return out;
}

// Largest amount by which applying d can raise the base jet degree of a
// monomial (per factor: value jet degree, minus one when the factor itself is
// a base variable).
int jet_span(const Derivation& d) {
  const Context& ctx = d.context();
  int span = 0;
  for (int i = 0; i < ctx.size(); ++i)
    for (const auto& [m, c] : d.value(i).terms()) {
      int raise = base_degree(ctx, m) - (ctx.is_base(i) ? 1 : 0);
      span = std::max(span, raise);
    }
  return span;
}

// True when applying d never lowers the base jet degree of a monomial; the
// jet window below zero is only sound in that case.
bool jet_monotone(const Derivation& d) {
  const Context& ctx = d.context();
  for (int i = 0; i < ctx.size(); ++i) {
    if (!ctx.is_base(i)) continue;
    for (const auto& [m, c] : d.value(i).terms())
      if (base_degree(ctx, m) < 1) return false;
  }
  return true;
}

struct ChainCohomology {
  std::vector<Monomial> basis;      // full chain basis at the degree
  std::map<Monomial, int> index;
  RowSpan boundaries{0};            // boundary span from jet-capped sources
  std::vector<QVector> cocycles;    // raw kernel vectors from the capped domain
  std::vector<QVector> classes;     // independent nonzero residues mod boundaries
};

QVector normalized(QVector v) {
  for (const Rational& c : v)
    if (c != 0) {
      Rational lead = c;
      for (Rational& e : v) e /= lead;
      break;
    }
  return v;
}

ChainCohomology chain_cohomology(const Derivation& delta, int degree, int jet_cap) {
  const Context& ctx = delta.context();
  ChainCohomology out;
  out.basis = monomial_basis(ctx, degree);
  out.index = index_of(out.basis);
  const int dim = static_cast<int>(out.basis.size());

  // Kernel of d on the capped domain, embedded in the full chain basis.
  std::vector<Monomial> dom = chain_basis(ctx, degree, jet_cap);
  std::vector<Monomial> cod = monomial_basis(ctx, degree + 1);
  std::map<Monomial, int> cod_index = index_of(cod);
  const int ncod = static_cast<int>(cod.size());
  QMatrix mat(ncod, static_cast<int>(dom.size()));
  for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
    GradedPolynomial im = delta.apply(GradedPolynomial::monomial(ctx, dom[j], Rational(1)));
    QVector col = coordinates(im, cod_index, ncod);
    for (int i = 0; i < ncod; ++i) mat.at(i, j) = col[i];
  }
  for (const QVector& k : kernel_basis(mat)) {
    QVector v(static_cast<size_t>(dim), Rational(0));
    for (int j = 0; j < static_cast<int>(dom.size()); ++j)
      if (k[static_cast<size_t>(j)] != 0) v[static_cast<size_t>(out.index.at(dom[j]))] = k[static_cast<size_t>(j)];
    out.cocycles.push_back(std::move(v));
  }

  // Boundaries of jet-capped sources one degree below.
  out.boundaries = RowSpan(dim);
  for (const auto& m : chain_basis(ctx, degree - 1, jet_cap)) {
    GradedPolynomial b = delta.apply(GradedPolynomial::monomial(ctx, m, Rational(1)));
    if (!b.is_zero()) out.boundaries.insert(coordinates(b, out.index, dim));
  }

  RowSpan quot = out.boundaries;
  for (const QVector& z : out.cocycles) {
    QVector red = quot.reduce(z);
    bool nonzero = false;
    for (const Rational& c : red)
      if (c != 0) { nonzero = true; break; }
    if (!nonzero) continue;
    red = normalized(std::move(red));
    quot.insert(red);
    out.classes.push_back(std::move(red));
  }
  return out;
}

void require_differential(const Derivation& delta) {
  QCheck chk = check_q(delta);
  if (!chk.ok) throw MathError("the given derivation does not square to zero");
}

// Chain cap used at one total degree, plus whether the truncation can
// represent that degree faithfully. When the window degenerates (the
// differential is not jet-monotone, or its span exceeds the jet order) the
// naive cap is returned and the result is flagged unreliable instead of
// refusing outright, so callers still get partial dimensions.
struct ChainWindow {
  int cap = 0;
  bool reliable = true;
};

ChainWindow chain_window(const Derivation& delta, int degree) {
  const Context& ctx = delta.context();
  if (degree >= 0) return {ctx.jet_order(), true};
  if (!jet_monotone(delta)) return {ctx.jet_order(), false};
  int w = ctx.jet_order() - jet_span(delta);
  if (w < 0) return {ctx.jet_order(), false};
  return {w, true};
}

std::string unique_name(const Context& ctx, std::string base) {
  while (ctx.index_of(base)) base += "_";
  return base;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  assert(a.cols() == b.rows());
  QMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

bool is_zero_matrix(const QMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

// Span of all truncated jet multiples of the generators, in coordinates over
// the base monomial basis.
RowSpan ideal_span(const Context& ctx, const std::vector<GradedPolynomial>& gens,
                   const std::vector<Monomial>& jets, const std::map<Monomial, int>& jet_index) {
  RowSpan span(static_cast<int>(jets.size()));
  for (const auto& g : gens)
    for (const auto& m : jets) {
      GradedPolynomial prod = GradedPolynomial::monomial(ctx, m, Rational(1)) * g;
      if (!prod.is_zero()) span.insert(coordinates(prod, jet_index, span.dim()));
    }
  return span;
}

}  // namespace

KTBuildResult kt_build(const Context& base_ctx, const std::vector<GradedPolynomial>& ideal,
                       int depth) {
  for (int i = 0; i < base_ctx.size(); ++i)
    if (!base_ctx.is_base(i)) throw UsageError("kt_build starts from a chart of degree-0 variables");
  if (depth < 1) throw UsageError("kt_build depth must be positive");
  if (ideal.empty()) throw UsageError("kt_build needs at least one ideal generator");
  for (const auto& g : ideal) {
    if (!(g.context() == base_ctx)) throw UsageError("ideal generator lives on a different chart");
    if (g.is_zero()) throw UsageError("ideal generators must be nonzero");
  }
  if (base_ctx.filtration_order() < 2)
    throw MathError("filtration order too small for the Tate resolution");

  KTBuildResult out;
  Context cur = base_ctx;

  // Koszul level: one degree -1 generator per ideal generator.
  std::vector<VarDecl> decls;
  for (size_t a = 0; a < ideal.size(); ++a)
    decls.push_back(VarDecl{unique_name(cur, "xi" + std::to_string(a + 1)), -1});
  cur = cur.extended(decls);
  std::vector<GradedPolynomial> values;
  for (int i = 0; i < base_ctx.size(); ++i) values.push_back(GradedPolynomial::zero(cur));
  for (const auto& g : ideal) values.push_back(GradedPolynomial::transferred(g, cur));
  Derivation delta = Derivation::make(cur, 1, values);
  for (size_t a = 0; a < ideal.size(); ++a)
    out.adjoined.push_back(base_ctx.size() + static_cast<int>(a));
  out.level_counts.push_back(static_cast<int>(ideal.size()));
  out.depth = 1;

  const int jet = cur.jet_order();
  const int filt = cur.filtration_order();

  for (int k = 1; k < depth; ++k) {
    int window = jet - jet_span(delta);
    if (window < 0) throw MathError("jet order too small for the Tate window");

    ChainCohomology cc = chain_cohomology(delta, -k, window);
    if (cc.classes.empty()) break;  // complete intersection below this level

    if (k + 1 >= filt) throw MathError("filtration order too small for the Tate resolution");

    // Module generators of the level: greedily pick the residue whose leading
    // basis monomial is simplest, then sweep out all its jet multiples.
    std::vector<Monomial> jets_basis = base_monomials(cur);
    RowSpan covered = cc.boundaries;
    std::vector<GradedPolynomial> new_gens;
    for (;;) {
      int best = -1;
      QVector best_red;
      for (const QVector& z : cc.cocycles) {
        QVector red = covered.reduce(z);
        int lead = -1;
        for (size_t i = 0; i < red.size(); ++i)
          if (red[i] != 0) { lead = static_cast<int>(i); break; }
        if (lead < 0) continue;
        if (best < 0 || lead < best) {
          best = lead;
          best_red = std::move(red);
        }
      }
      if (best < 0) break;
      GradedPolynomial g = from_coordinates(cur, cc.basis, normalized(std::move(best_red)));
      new_gens.push_back(g);
      for (const auto& m : jets_basis) {
        GradedPolynomial mult = GradedPolynomial::monomial(cur, m, Rational(1)) * g;
        if (!mult.is_zero())
          covered.insert(coordinates(mult, cc.index, static_cast<int>(cc.basis.size())));
      }
    }
    assert(!new_gens.empty());

    // Adjoin one degree -(k+1) generator per module generator.
    std::vector<VarDecl> extra;
    for (size_t i = 0; i < new_gens.size(); ++i)
      extra.push_back(VarDecl{
          unique_name(cur, "w" + std::to_string(k + 1) + "_" + std::to_string(i + 1)), -(k + 1)});
    Context ext = cur.extended(extra);
    std::vector<GradedPolynomial> vals;
    for (int i = 0; i < cur.size(); ++i)
      vals.push_back(GradedPolynomial::transferred(delta.value(i), ext));
    for (const auto& g : new_gens) vals.push_back(GradedPolynomial::transferred(g, ext));
    for (size_t i = 0; i < new_gens.size(); ++i)
      out.adjoined.push_back(cur.size() + static_cast<int>(i));
    cur = ext;
    delta = Derivation::make(cur, 1, vals);
    out.level_counts.push_back(static_cast<int>(new_gens.size()));
    out.depth = k + 1;

    // The adjoined boundaries must clear the level they were built for.
    int recheck_window = jet - jet_span(delta);
    if (recheck_window < 0) throw MathError("jet order too small for the Tate window");
    ChainCohomology post = chain_cohomology(delta, -k, recheck_window);
    if (!post.classes.empty()) throw MathError("Tate adjunction failed to clear its level");
  }

  {
    QCheck chk = check_q(delta);
    if (!chk.ok) throw MathError("Tate differential fails to square to zero");
  }
  out.window = jet - jet_span(delta);
  if (out.window < 0) throw MathError("jet order too small for the Tate window");
  ChainCohomology h0 = chain_cohomology(delta, 0, jet);
  out.h0_dim = static_cast<int>(h0.classes.size());
  out.ctx = cur;
  out.delta = delta;
  for (const auto& g : ideal) out.ideal.push_back(GradedPolynomial::transferred(g, cur));
  return out;
}

CohomologyReport complex_cohomology(const Derivation& delta, int degree) {
  require_differential(delta);
  const Context& ctx = delta.context();
  CohomologyReport rep;
  rep.degree = degree;
  rep.windowed = degree < 0;
  ChainWindow win = chain_window(delta, degree);
  rep.window = win.cap;
  rep.reliable = win.reliable;
  ChainCohomology cc = chain_cohomology(delta, degree, rep.window);
  rep.dim = static_cast<int>(cc.classes.size());
  for (const QVector& v : cc.classes)
    rep.representatives.push_back(from_coordinates(ctx, cc.basis, v));
  return rep;
}

KTVerifyReport kt_verify(const Derivation& delta) {
  const Context& ctx = delta.context();
  KTVerifyReport rep;
  rep.square_zero = check_q(delta).ok;
  rep.resolution_shaped = true;
  for (int i = 0; i < ctx.size(); ++i)
    if (ctx.degree(i) >= 0 && !delta.value(i).is_zero()) rep.resolution_shaped = false;
  if (!rep.square_zero) return rep;

  int depth = 0;
  for (int i = 0; i < ctx.size(); ++i) depth = std::max(depth, ctx.neg_degree(i));
  ChainWindow win = chain_window(delta, -1);
  rep.window = win.cap;
  rep.window_reliable = win.reliable;
  rep.h0_dim = static_cast<int>(chain_cohomology(delta, 0, ctx.jet_order()).classes.size());
  rep.acyclic = true;
  for (int k = 1; k <= depth; ++k) {
    int dim = static_cast<int>(chain_cohomology(delta, -k, rep.window).classes.size());
    rep.h_dims.push_back(dim);
    if (dim != 0) rep.acyclic = false;
  }
  return rep;
}

VectorFieldCohomologyReport advf_cohomology(const Derivation& delta, int degree) {
  require_differential(delta);
  const Context& ctx = delta.context();

  auto term_derivation = [&](const DerivationTerm& t, int deg) {
    Derivation d = Derivation::zero(ctx, deg);
    d.set_value(t.var, GradedPolynomial::monomial(ctx, t.mono, Rational(1)));
    return d;
  };
  auto term_index = [](const std::vector<DerivationTerm>& terms) {
    std::map<std::pair<int, Monomial>, int> idx;
    for (size_t i = 0; i < terms.size(); ++i)
      idx.emplace(std::make_pair(terms[i].var, terms[i].mono), static_cast<int>(i));
    return idx;
  };
  auto flatten = [&](const Derivation& d, const std::map<std::pair<int, Monomial>, int>& idx,
                     int dim) {
    QVector v(static_cast<size_t>(dim), Rational(0));
    for (int i = 0; i < ctx.size(); ++i)
      for (const auto& [m, c] : d.value(i).terms()) {
        auto it = idx.find(std::make_pair(i, m));
        assert(it != idx.end());
        v[static_cast<size_t>(it->second)] = c;
      }
    return v;
  };

  std::vector<DerivationTerm> dom = derivation_term_basis(ctx, degree);
  std::vector<DerivationTerm> cod = derivation_term_basis(ctx, degree + 1);
  std::vector<DerivationTerm> src = derivation_term_basis(ctx, degree - 1);
  auto cod_idx = term_index(cod);
  const int ncod = static_cast<int>(cod.size());
  const int ndom = static_cast<int>(dom.size());

  QMatrix mat(ncod, ndom);
  for (int j = 0; j < ndom; ++j) {
    Derivation image = commutator(delta, term_derivation(dom[j], degree));
    QVector col = flatten(image, cod_idx, ncod);
    for (int i = 0; i < ncod; ++i) mat.at(i, j) = col[i];
  }
  std::vector<QVector> ker = kernel_basis(mat);

  auto dom_idx = term_index(dom);
  RowSpan bspan(ndom);
  for (const auto& t : src) {
    Derivation b = commutator(delta, term_derivation(t, degree - 1));
    if (!b.is_zero()) bspan.insert(flatten(b, dom_idx, ndom));
  }

  VectorFieldCohomologyReport rep;
  rep.degree = degree;
  RowSpan quot = bspan;
  for (const QVector& z : ker) {
    QVector red = quot.reduce(z);
    bool nonzero = false;
    for (const Rational& c : red)
      if (c != 0) { nonzero = true; break; }
    if (!nonzero) continue;
    red = normalized(std::move(red));
    quot.insert(red);
    Derivation r = Derivation::zero(ctx, degree);
    for (int j = 0; j < ndom; ++j)
      if (red[static_cast<size_t>(j)] != 0) r += red[static_cast<size_t>(j)] * term_derivation(dom[j], degree);
    rep.representatives.push_back(std::move(r));
  }
  rep.dim = static_cast<int>(rep.representatives.size());
  return rep;
}

LinearComplexReport linearization(const Derivation& delta) {
  require_differential(delta);
  const Context& ctx = delta.context();

  int depth = 0;
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.pos_degree(i) > 0) throw UsageError("linearization expects a resolution chart");
    depth = std::max(depth, ctx.neg_degree(i));
  }
  if (depth < 1) throw UsageError("linearization needs at least one negative generator");

  LinearComplexReport rep;
  rep.level_vars.resize(static_cast<size_t>(depth) + 1);
  for (int i = 0; i < ctx.size(); ++i)
    rep.level_vars[static_cast<size_t>(ctx.neg_degree(i))].push_back(i);

  std::vector<GradedPolynomial> gens;
  for (int i : rep.level_vars[1]) {
    GradedPolynomial g = delta.value(i).base_projection();
    if (!g.is_zero()) gens.push_back(g);
  }
  std::vector<Monomial> jets = base_monomials(ctx);
  std::map<Monomial, int> jet_index = index_of(jets);
  RowSpan ispan = ideal_span(ctx, gens, jets, jet_index);

  std::vector<int> rep_cols;
  {
    const std::vector<int>& piv = ispan.pivots();
    size_t p = 0;
    for (size_t j = 0; j < jets.size(); ++j) {
      if (p < piv.size() && piv[p] == static_cast<int>(j)) { ++p; continue; }
      rep_cols.push_back(static_cast<int>(j));
      rep.algebra_basis.push_back(jets[j]);
    }
  }
  rep.algebra_dim = static_cast<int>(rep.algebra_basis.size());
  const int adim = rep.algebra_dim;

  // Class coordinates of a base polynomial in the quotient algebra basis.
  auto class_coords = [&](const GradedPolynomial& p) {
    QVector full = ispan.reduce(coordinates(p, jet_index, static_cast<int>(jets.size())));
    QVector out(static_cast<size_t>(adim), Rational(0));
    for (int j = 0; j < adim; ++j) out[static_cast<size_t>(j)] = full[static_cast<size_t>(rep_cols[static_cast<size_t>(j)])];
    return out;
  };

  // The base-polynomial coefficient of delta pairing a generator one level up
  // with each generator of the target level.
  auto linear_coefficient = [&](int w, int v) {
    GradedPolynomial c = GradedPolynomial::zero(ctx);
    for (const auto& [m, coef] : delta.value(w).terms()) {
      if (arity(ctx, m) != 1 || m.exponent(v) != 1) continue;
      Monomial base = m;
      base.exponents[static_cast<size_t>(v)] = 0;
      c.add_term(base, coef);
    }
    return c;
  };

  for (int k = 0; k < depth; ++k) {
    const std::vector<int>& lo = rep.level_vars[static_cast<size_t>(k)];
    const std::vector<int>& hi = rep.level_vars[static_cast<size_t>(k) + 1];
    QMatrix m(static_cast<int>(lo.size()) * adim, static_cast<int>(hi.size()) * adim);
    for (size_t b = 0; b < hi.size(); ++b)
      for (size_t a = 0; a < lo.size(); ++a) {
        GradedPolynomial entry = k == 0 ? delta.value(hi[b]).base_projection().derivative(lo[a])
                                        : linear_coefficient(hi[b], lo[a]);
        if (entry.is_zero()) continue;
        for (int l = 0; l < adim; ++l) {
          GradedPolynomial prod =
              entry * GradedPolynomial::monomial(ctx, rep.algebra_basis[static_cast<size_t>(l)], Rational(1));
          QVector cls = class_coords(prod);
          for (int r = 0; r < adim; ++r)
            m.at(static_cast<int>(a) * adim + r, static_cast<int>(b) * adim + l) = cls[static_cast<size_t>(r)];
        }
      }
    rep.ranks.push_back(rank(m));
    rep.maps.push_back(std::move(m));
  }

  for (int k = 0; k + 1 < depth; ++k)
    if (!is_zero_matrix(mat_mul(rep.maps[static_cast<size_t>(k)], rep.maps[static_cast<size_t>(k) + 1])))
      throw MathError("linear strand fails to compose to zero");

  for (int k = 0; k <= depth; ++k) {
    int dim_k = static_cast<int>(rep.level_vars[static_cast<size_t>(k)].size()) * adim;
    int h = dim_k;
    if (k > 0) h -= rep.ranks[static_cast<size_t>(k) - 1];
    if (k < depth) h -= rep.ranks[static_cast<size_t>(k)];
    rep.homology_dims.push_back(h);
  }
  return rep;
}

Derivation lift_derivation(const Derivation& delta, const Derivation& x0) {
  require_differential(delta);
  const Context& ctx = delta.context();
  if (!(x0.context() == ctx)) throw UsageError("vector field and differential live on different charts");
  if (x0.degree() != 0) throw UsageError("only degree-0 vector fields are lifted");
  int depth = 0;
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.pos_degree(i) > 0) throw UsageError("lift expects a resolution chart");
    depth = std::max(depth, ctx.neg_degree(i));
    if (!ctx.is_base(i) && !x0.value(i).is_zero())
      throw UsageError("the input vector field must live on the base");
  }

  Derivation lift = x0;
  for (int k = 1; k <= depth; ++k) {
    std::vector<Monomial> dom = monomial_basis(ctx, -k);
    std::vector<Monomial> cod = monomial_basis(ctx, -k + 1);
    std::map<Monomial, int> cod_index = index_of(cod);
    const int ncod = static_cast<int>(cod.size());
    QMatrix mat(ncod, static_cast<int>(dom.size()));
    for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
      GradedPolynomial im = delta.apply(GradedPolynomial::monomial(ctx, dom[j], Rational(1)));
      QVector col = coordinates(im, cod_index, ncod);
      for (int i = 0; i < ncod; ++i) mat.at(i, j) = col[i];
    }
    for (int v = 0; v < ctx.size(); ++v) {
      if (ctx.neg_degree(v) != k) continue;
      GradedPolynomial rhs = lift.apply(delta.value(v));
      std::optional<QVector> sol = solve(mat, coordinates(rhs, cod_index, ncod));
      if (!sol)
        throw MathError("vector field does not lift past generator " + ctx.name(v));
      lift.set_value(v, from_coordinates(ctx, dom, *sol));
    }
  }
  if (!commutator(delta, lift).is_zero()) throw MathError("lift verification failed");
  return lift;
}

}  // namespace gradedq
