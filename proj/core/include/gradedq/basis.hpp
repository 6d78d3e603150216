// Deterministic enumeration of monomial bases inside a truncated context, and
// conversion between polynomials and coordinate vectors. Every solver in the
// library routes its unknowns through these orderings, so representative
// choices (cocycles, homotopies, adjoined generators) are reproducible and
// biased towards low jet degree.

#ifndef GRADEDQ_BASIS_HPP
#define GRADEDQ_BASIS_HPP

#include <map>
#include <utility>
#include <vector>

#include "gradedq/linalg.hpp"
#include "gradedq/polynomial.hpp"

namespace gradedq {

// Orders monomials by (negative degree, base degree, arity, exponent lex):
// "simplest first". Returns true when a precedes b.
bool monomial_before(const Context& ctx, const Monomial& a, const Monomial& b);

// All monomials of the given total degree that survive truncation, sorted by
// monomial_before.
std::vector<Monomial> monomial_basis(const Context& ctx, int total_degree);

// All monomials in base (degree-zero) variables with base degree <= jet
// order, sorted by monomial_before.
std::vector<Monomial> base_monomials(const Context& ctx);

// Every monomial that survives truncation, across all total degrees. Base and
// negative exponents are bounded by the truncation orders and odd variables
// square to zero; even positive variables have no intrinsic bound, so their
// exponents are capped at positive_cap. Sorted by monomial_before.
std::vector<Monomial> truncated_monomials(const Context& ctx, int positive_cap);

// Coefficient-of-partial terms m * d/dv spanning the degree-k derivations
// compatible with truncation, sorted by (monomial_before, variable index).
struct DerivationTerm {
  int var;
  Monomial mono;
};
std::vector<DerivationTerm> derivation_term_basis(const Context& ctx, int total_degree);

std::map<Monomial, int> index_of(const std::vector<Monomial>& basis);

// Coordinates of p in the indexed basis; monomials of p outside the index are
// rejected with an assertion (callers enumerate compatible bases).
QVector coordinates(const GradedPolynomial& p, const std::map<Monomial, int>& index, int dim);

GradedPolynomial from_coordinates(const Context& ctx, const std::vector<Monomial>& basis,
                                  const QVector& v);

}  // namespace gradedq

#endif
