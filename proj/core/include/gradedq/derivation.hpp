// Graded derivations of a truncated polynomial algebra, represented by their
// values on the generators. A derivation of total degree k maps a generator v
// to a homogeneous element of degree deg(v) + k and extends by the graded
// Leibniz rule; the commutator makes them a graded Lie algebra.

#ifndef GRADEDQ_DERIVATION_HPP
#define GRADEDQ_DERIVATION_HPP

#include <string>
#include <vector>

#include "gradedq/polynomial.hpp"

namespace gradedq {

class Derivation {
 public:
  Derivation() = default;  // empty derivation over the empty context

  static Derivation zero(const Context& ctx, int degree);
  // Validates each value: homogeneous of total degree deg(v) + degree.
  static Derivation make(const Context& ctx, int degree, std::vector<GradedPolynomial> values);
  // Coordinate vector field d/dv, of total degree -deg(v).
  static Derivation partial(const Context& ctx, int var);

  const Context& context() const { return ctx_; }
  int degree() const { return degree_; }
  const GradedPolynomial& value(int var) const { return values_[var]; }
  const std::vector<GradedPolynomial>& values() const { return values_; }
  void set_value(int var, GradedPolynomial v);
  bool is_zero() const;

  // Graded Leibniz extension to arbitrary elements.
  GradedPolynomial apply(const GradedPolynomial& p) const;

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  Derivation& operator*=(const Rational& c);
  Derivation operator-() const;
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Rational& c, Derivation d) { return d *= c; }
  bool operator==(const Derivation& o) const;

  // Negative degree of a term c d/dv is neg(c) - neg(v); arity is
  // arity(c) - 1 for graded v and arity(c) for base v.
  Derivation negdeg_component(int n) const;
  Derivation arity_component(int n) const;
  int min_negdeg() const;  // 0 when the derivation vanishes
  int max_negdeg() const;

  // Same derivation data re-read in another context (shared names must agree
  // in degree and order; extra truncation is applied).
  Derivation transferred(const Context& target) const;

  std::string str() const;

 private:
  Derivation(Context ctx, int degree, std::vector<GradedPolynomial> values)
      : ctx_(std::move(ctx)), degree_(degree), values_(std::move(values)) {}

  Context ctx_;
  int degree_ = 0;
  std::vector<GradedPolynomial> values_;
};

// [X, Y] = X Y - (-1)^{|X||Y|} Y X.
Derivation commutator(const Derivation& x, const Derivation& y);

// Left multiplication f * X, the derivation p -> f * X(p); f must be zero or
// homogeneous, and the result has degree deg(f) + deg(X).
Derivation scaled(const GradedPolynomial& f, const Derivation& x);

}  // namespace gradedq

#endif
