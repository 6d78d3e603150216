// Shared fixtures for the unit and acceptance suites: compact chart builders,
// seeded random polynomials / flows / models, and slow reference computations
// used as independent oracles.

#ifndef GRADEDQ_TESTS_SUPPORT_HPP
#define GRADEDQ_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gradedq/basis.hpp"
#include "gradedq/derivation.hpp"
#include "gradedq/flows.hpp"
#include "gradedq/linalg.hpp"

namespace gradedq::testing {

inline Context chart(std::vector<std::pair<std::string, int>> vars, int jet, int filt) {
  std::vector<VarDecl> decls;
  for (auto& [name, deg] : vars) decls.push_back(VarDecl{name, deg});
  return Context::make(std::move(decls), jet, filt);
}

inline GradedPolynomial poly_of(const Context& ctx, const Monomial& m) {
  return GradedPolynomial::monomial(ctx, m, 1);
}

inline Rational random_coeff(std::mt19937& rng) {
  static const Rational table[] = {Rational(1),  Rational(-1), Rational(2),
                                   Rational(-2), Rational(3),  Rational(1) / 2,
                                   Rational(-1) / 3};
  return table[rng() % 7];
}

// Random polynomial of one total degree: up to max_terms monomials sampled
// from the truncated basis. May be zero when allow_zero is set.
inline GradedPolynomial random_poly(const Context& ctx, int degree, std::mt19937& rng,
                                    int max_terms = 2, bool allow_zero = true) {
  std::vector<Monomial> basis = monomial_basis(ctx, degree);
  GradedPolynomial out = GradedPolynomial::zero(ctx);
  if (basis.empty()) return out;
  int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms + (allow_zero ? 1 : 0)));
  if (!allow_zero) terms += 1;
  for (int t = 0; t < terms; ++t)
    out += random_coeff(rng) * poly_of(ctx, basis[rng() % basis.size()]);
  if (!allow_zero && out.is_zero()) out = poly_of(ctx, basis[rng() % basis.size()]);
  return out;
}

// Random polynomial in the base variables only.
inline GradedPolynomial random_base_poly(const Context& ctx, std::mt19937& rng,
                                         int max_terms = 3) {
  std::vector<Monomial> basis = base_monomials(ctx);
  GradedPolynomial out = GradedPolynomial::zero(ctx);
  int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms)) + 1;
  for (int t = 0; t < terms; ++t)
    out += random_coeff(rng) * poly_of(ctx, basis[rng() % basis.size()]);
  return out;
}

// Every monomial surviving the truncation, with even positive exponents
// capped at the jet order.
inline std::vector<Monomial> all_monomials(const Context& ctx) {
  return truncated_monomials(ctx, ctx.jet_order());
}

// Random homogeneous derivation of the truncated algebra itself: each value
// term keeps the truncation ideal stable (it does not lower the base degree
// of a base variable or the negative degree of a negative one), so the
// Leibniz and Jacobi identities hold exactly on truncated products.
inline Derivation random_stable_derivation(const Context& ctx, int degree, std::mt19937& rng,
                                           int max_terms = 2) {
  Derivation out = Derivation::zero(ctx, degree);
  for (int v = 0; v < ctx.size(); ++v) {
    std::vector<Monomial> pool;
    for (const Monomial& m : monomial_basis(ctx, degree + ctx.degree(v))) {
      if (ctx.is_base(v) && base_degree(ctx, m) < 1) continue;
      if (negative_degree(ctx, m) < ctx.neg_degree(v)) continue;
      pool.push_back(m);
    }
    if (pool.empty()) continue;
    GradedPolynomial val = GradedPolynomial::zero(ctx);
    int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
    for (int t = 0; t < terms; ++t)
      val += random_coeff(rng) * poly_of(ctx, pool[rng() % pool.size()]);
    out.set_value(v, val);
  }
  return out;
}

inline int weight(const Context& ctx, const Monomial& m) {
  return base_degree(ctx, m) + negative_degree(ctx, m);
}

// Random degree-0 generator whose exponential terminates at the truncation:
// every term strictly raises jet-plus-filtration weight, checked by actually
// exponentiating.
inline Derivation random_flow_generator(const Context& ctx, std::mt19937& rng) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    Derivation g = Derivation::zero(ctx, 0);
    for (int v = 0; v < ctx.size(); ++v) {
      if (rng() % 5 >= 2) continue;
      const int wv = ctx.degree(v) == 0 ? 1 : -std::min(ctx.degree(v), 0);
      std::vector<Monomial> pool;
      for (const Monomial& m : monomial_basis(ctx, ctx.degree(v)))
        if (weight(ctx, m) > wv) pool.push_back(m);
      if (pool.empty()) continue;
      GradedPolynomial val = g.value(v);
      val += random_coeff(rng) * poly_of(ctx, pool[rng() % pool.size()]);
      g.set_value(v, val);
    }
    if (g.is_zero()) continue;
    try {
      exp_flow(g);
      return g;
    } catch (const std::exception&) {
    }
  }
  return Derivation::zero(ctx, 0);
}

// Flattens a derivation of one total degree into exact coordinates over the
// derivation-term basis.
inline QVector derivation_coordinates(const Derivation& d,
                                      const std::vector<DerivationTerm>& basis) {
  const Context& ctx = d.context();
  std::vector<std::map<Monomial, int>> index(static_cast<size_t>(ctx.size()));
  for (size_t t = 0; t < basis.size(); ++t)
    index[static_cast<size_t>(basis[t].var)].emplace(basis[t].mono, static_cast<int>(t));
  QVector out(basis.size(), Rational(0));
  for (int v = 0; v < ctx.size(); ++v) {
    for (const auto& [mono, coeff] : d.value(v).terms()) {
      auto it = index[static_cast<size_t>(v)].find(mono);
      if (it != index[static_cast<size_t>(v)].end()) out[static_cast<size_t>(it->second)] = coeff;
    }
  }
  return out;
}

// Brute-force cohomology dimension of ad_delta at one total degree: rank
// bookkeeping over stacked commutator images, independent of the library's
// chain-complex plumbing.
inline int advf_dim_oracle(const Derivation& delta, int degree) {
  const Context& ctx = delta.context();
  std::vector<DerivationTerm> chains = derivation_term_basis(ctx, degree);
  std::vector<DerivationTerm> out_basis = derivation_term_basis(ctx, degree + 1);
  std::vector<DerivationTerm> in_basis = derivation_term_basis(ctx, degree - 1);
  const int n = static_cast<int>(chains.size());

  QMatrix mat(static_cast<int>(out_basis.size()), n);
  for (int j = 0; j < n; ++j) {
    Derivation t = Derivation::zero(ctx, degree);
    t.set_value(chains[static_cast<size_t>(j)].var,
                poly_of(ctx, chains[static_cast<size_t>(j)].mono));
    QVector col = derivation_coordinates(commutator(delta, t), out_basis);
    for (int i = 0; i < static_cast<int>(col.size()); ++i) mat.at(i, j) = col[static_cast<size_t>(i)];
  }
  std::vector<QVector> cocycles = kernel_basis(mat);

  RowSpan boundaries(n);
  for (const DerivationTerm& term : in_basis) {
    Derivation t = Derivation::zero(ctx, degree - 1);
    t.set_value(term.var, poly_of(ctx, term.mono));
    boundaries.insert(derivation_coordinates(commutator(delta, t), chains));
  }
  const int boundary_rank = boundaries.rank();
  for (const QVector& z : cocycles) boundaries.insert(z);
  return boundaries.rank() - boundary_rank;
}

// Quotient dimension of truncated base polynomials by an ideal, by direct row
// reduction of every truncated multiple of the generators.
inline int quotient_dim_oracle(const Context& ctx, const std::vector<GradedPolynomial>& gens) {
  std::vector<Monomial> basis = base_monomials(ctx);
  std::map<Monomial, int> index = index_of(basis);
  RowSpan span(static_cast<int>(basis.size()));
  for (const GradedPolynomial& g : gens)
    for (const Monomial& m : basis)
      span.insert(coordinates(poly_of(ctx, m) * g, index, static_cast<int>(basis.size())));
  return static_cast<int>(basis.size()) - span.rank();
}

}  // namespace gradedq::testing

#endif
