#include "doctest.h"

#include "gradedq/derivation.hpp"
#include "gradedq/errors.hpp"
#include "support.hpp"

using namespace gradedq;
using gradedq::testing::chart;
using gradedq::testing::poly_of;

namespace {

Context resolution_chart(int jet = 3) {
  return chart({{"x", 0}, {"y", 0}, {"xi", -1}}, jet, 2);
}

Derivation xy_delta(const Context& ctx) {
  GradedPolynomial xy =
      GradedPolynomial::variable(ctx, 0) * GradedPolynomial::variable(ctx, 1);
  return Derivation::make(ctx, 1, {GradedPolynomial::zero(ctx), GradedPolynomial::zero(ctx), xy});
}

// Random derivation of one total degree as a short sum of basis terms.
Derivation random_derivation(const Context& ctx, int degree, std::mt19937& rng) {
  std::vector<DerivationTerm> basis = derivation_term_basis(ctx, degree);
  Derivation d = Derivation::zero(ctx, degree);
  if (basis.empty()) return d;
  int terms = 1 + static_cast<int>(rng() % 2);
  for (int t = 0; t < terms; ++t) {
    const DerivationTerm& term = basis[rng() % basis.size()];
    GradedPolynomial v = d.value(term.var);
    v += gradedq::testing::random_coeff(rng) * poly_of(ctx, term.mono);
    d.set_value(term.var, v);
  }
  return d;
}

}  // namespace

TEST_CASE("derivation construction validates degrees") {
  Context ctx = resolution_chart();
  GradedPolynomial x = GradedPolynomial::variable(ctx, 0);
  CHECK_THROWS_AS(Derivation::make(ctx, 1, {x, x, x}), UsageError);  // deg(Q(x)) must be 1
  Derivation d = xy_delta(ctx);
  CHECK(d.degree() == 1);
  CHECK(d.value(2).str() == "x*y");
}

TEST_CASE("apply follows the graded Leibniz rule") {
  Context ctx = chart({{"x", 0}, {"eta", -1}, {"theta", 1}}, 3, 2);
  GradedPolynomial x = GradedPolynomial::variable(ctx, 0);
  GradedPolynomial eta = GradedPolynomial::variable(ctx, 1);
  GradedPolynomial theta = GradedPolynomial::variable(ctx, 2);

  // Q = theta d/dx + d/deta
  Derivation q = Derivation::make(ctx, 1, {theta, GradedPolynomial::constant(ctx, 1),
                                           GradedPolynomial::zero(ctx)});
  CHECK(q.apply(x * x) == Rational(2) * (x * theta));
  // on the canonical word x*eta: theta passes nothing for the x factor but
  // lands left of eta, and the eta derivative costs no sign after an even x
  CHECK(q.apply(x * eta) == x - eta * theta);
  CHECK(q.apply(eta) == GradedPolynomial::constant(ctx, 1));
}

TEST_CASE("frozen commutator example") {
  Context ctx = resolution_chart();
  Derivation delta = xy_delta(ctx);
  Derivation ddx = Derivation::partial(ctx, 0);
  Derivation c = commutator(delta, ddx);
  // [delta, d/dx] = -y d/dxi
  CHECK(c.degree() == 1);
  CHECK(c.value(0).is_zero());
  CHECK(c.value(1).is_zero());
  CHECK(c.value(2) == -GradedPolynomial::variable(ctx, 1));
}

TEST_CASE("odd derivations anticommute with themselves") {
  Context ctx = resolution_chart();
  Derivation delta = xy_delta(ctx);
  Derivation sq = commutator(delta, delta);
  CHECK(sq.is_zero());  // [delta, delta] = 2 delta^2 = 0 here
}

// The law suites sample derivations of the truncated algebra itself (values
// keep the truncation ideal stable); unconstrained term sums are operators
// that need not respect truncated products.
TEST_CASE("leibniz property holds on random inputs") {
  Context ctx = chart({{"x", 0}, {"y", 0}, {"eta", -1}, {"mu", -2}, {"theta", 1}}, 3, 4);
  std::mt19937 rng(11);
  int done = 0;
  for (int t = 0; t < 200; ++t) {
    int dX = static_cast<int>(rng() % 5) - 2;
    int da = static_cast<int>(rng() % 5) - 2;
    int db = static_cast<int>(rng() % 5) - 2;
    Derivation X = gradedq::testing::random_stable_derivation(ctx, dX, rng);
    GradedPolynomial a = gradedq::testing::random_poly(ctx, da, rng);
    GradedPolynomial b = gradedq::testing::random_poly(ctx, db, rng);
    Rational sign = (dX % 2 != 0 && da % 2 != 0) ? Rational(-1) : Rational(1);
    CHECK(X.apply(a * b) == X.apply(a) * b + sign * (a * X.apply(b)));
    ++done;
  }
  CHECK(done == 200);
}

TEST_CASE("commutator degree and jacobi sample") {
  Context ctx = chart({{"x", 0}, {"eta", -1}, {"theta", 1}}, 2, 2);
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    int dX = static_cast<int>(rng() % 3) - 1;
    int dY = static_cast<int>(rng() % 3) - 1;
    int dZ = static_cast<int>(rng() % 3) - 1;
    Derivation X = gradedq::testing::random_stable_derivation(ctx, dX, rng);
    Derivation Y = gradedq::testing::random_stable_derivation(ctx, dY, rng);
    Derivation Z = gradedq::testing::random_stable_derivation(ctx, dZ, rng);
    Derivation lhs = commutator(X, commutator(Y, Z));
    Derivation rhs = commutator(commutator(X, Y), Z);
    Derivation tail = commutator(Y, commutator(X, Z));
    if (dX % 2 != 0 && dY % 2 != 0)
      rhs -= tail;
    else
      rhs += tail;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("filtration and arity components partition a derivation") {
  Context ctx = chart({{"x", 0}, {"y", 0}, {"xi", -1}, {"theta", 1}}, 3, 2);
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    Derivation d = random_derivation(ctx, static_cast<int>(rng() % 3), rng);
    Derivation neg_sum = Derivation::zero(ctx, d.degree());
    Derivation ar_sum = Derivation::zero(ctx, d.degree());
    for (int n = -4; n <= 4; ++n) {
      neg_sum += d.negdeg_component(n);
      ar_sum += d.arity_component(n);
    }
    CHECK(neg_sum == d);
    CHECK(ar_sum == d);
  }
}

TEST_CASE("scaled derivations and transfer") {
  Context ctx = resolution_chart();
  Context wide = ctx.extended({VarDecl{"theta", 1}});
  Derivation delta = xy_delta(ctx);
  Derivation up = delta.transferred(wide);
  CHECK(up.value(2).str() == "x*y");
  CHECK(up.value(3).is_zero());
  CHECK(up.transferred(ctx) == delta);

  GradedPolynomial x = GradedPolynomial::variable(ctx, 0);
  Derivation s = scaled(x, delta);
  CHECK(s.value(2) == x * delta.value(2));
}
