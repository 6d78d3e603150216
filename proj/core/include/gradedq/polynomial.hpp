// Truncated graded-commutative polynomials with exact rational coefficients.
//
// A GradedPolynomial is a finite sum of canonical monomials over one Context.
// Every mutating operation re-truncates: monomials whose base degree exceeds
// jet_order or whose negative degree reaches filtration_order are dropped, so
// the class genuinely models the quotient and equality is decidable.

#ifndef GRADEDQ_POLYNOMIAL_HPP
#define GRADEDQ_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "gradedq/monomial.hpp"
#include "gradedq/rational.hpp"

namespace gradedq {

enum class Grading { Total, Positive, Negative, Arity };

// Per-grading homogeneity summary of a polynomial; `value` is meaningful only
// when `homogeneous` (zero polynomials count as homogeneous of value 0).
struct GradingReport {
  bool homogeneous = true;
  int value = 0;
};

struct DegreeReport {
  GradingReport total, positive, negative, arity;
};

class GradedPolynomial {
 public:
  GradedPolynomial() = default;
  explicit GradedPolynomial(Context ctx) : ctx_(std::move(ctx)) {}

  static GradedPolynomial zero(const Context& ctx) { return GradedPolynomial(ctx); }
  static GradedPolynomial constant(const Context& ctx, const Rational& c);
  static GradedPolynomial variable(const Context& ctx, int i);
  static GradedPolynomial monomial(const Context& ctx, const Monomial& m, const Rational& c);

  const Context& context() const { return ctx_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * m, re-normalizing and dropping truncated monomials.
  void add_term(const Monomial& m, const Rational& c);

  GradedPolynomial& operator+=(const GradedPolynomial& o);
  GradedPolynomial& operator-=(const GradedPolynomial& o);
  GradedPolynomial& operator*=(const Rational& c);
  GradedPolynomial operator-() const;
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { a += b; return a; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { a -= b; return a; }
  friend GradedPolynomial operator*(GradedPolynomial a, const Rational& c) { a *= c; return a; }
  friend GradedPolynomial operator*(const Rational& c, GradedPolynomial a) { a *= c; return a; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);

  bool operator==(const GradedPolynomial& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }

  DegreeReport degree_report() const;
  bool is_homogeneous(Grading g, int* value = nullptr) const;
  GradedPolynomial homogeneous_component(Grading g, int n) const;
  // Component of given base (jet) degree.
  GradedPolynomial jet_component(int n) const;

  // Left partial derivative along variable i (Koszul signs included).
  GradedPolynomial derivative(int i) const;

  // Algebra morphism determined by variable images (images[i] substitutes
  // variable i; all images must share one context).
  GradedPolynomial substituted(const std::vector<GradedPolynomial>& images) const;

  // Image of p in another context: variables are matched by name, truncation
  // orders of `target` are enforced. Throws UsageError when a variable that
  // actually occurs has no counterpart.
  static GradedPolynomial transferred(const GradedPolynomial& p, const Context& target);

  // Evaluates every nonzero-degree variable to zero (the base projection) --
  // equal to homogeneous_component(Arity, 0).
  GradedPolynomial base_projection() const;
  // Evaluates positive-degree variables to zero.
  GradedPolynomial positive_to_zero() const;

  // Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;
  // Value at the chart origin: coefficient of the unit monomial.
  Rational constant_term() const;

  std::string str() const;

 private:
  Context ctx_;
  std::map<Monomial, Rational> terms_;
};

// Truncated multiplicative inverse of a polynomial with invertible "order-0
// part": p = c + n with c a nonzero constant and n of positive base degree or
// positive arity, inverted by the geometric series (exact at truncation).
// Throws MathError when the constant term vanishes or mixed terms prevent the
// series from terminating.
GradedPolynomial inverted(const GradedPolynomial& p);

}  // namespace gradedq

#endif
