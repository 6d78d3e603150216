#include "doctest.h"

#include "gradedq/errors.hpp"
#include "gradedq/qmanifold.hpp"
#include "support.hpp"

using namespace gradedq;
using gradedq::testing::chart;

namespace {

// x, y in degree 0, one curvature direction xi, one positive direction theta.
Context flat_chart() { return chart({{"x", 0}, {"y", 0}, {"xi", -1}, {"theta", 1}}, 3, 2); }

// Q = x*theta d/dx + (x*y - xi*theta) d/dxi; squares to zero on the nose.
Derivation flat_q(const Context& ctx) {
  GradedPolynomial x = GradedPolynomial::variable(ctx, 0);
  GradedPolynomial y = GradedPolynomial::variable(ctx, 1);
  GradedPolynomial xi = GradedPolynomial::variable(ctx, 2);
  GradedPolynomial theta = GradedPolynomial::variable(ctx, 3);
  return Derivation::make(ctx, 1,
                          {x * theta, GradedPolynomial::zero(ctx), x * y - xi * theta,
                           GradedPolynomial::zero(ctx)});
}

}  // namespace

TEST_CASE("check_q separates flat from curved") {
  Context ctx = flat_chart();
  QCheck flat = check_q(flat_q(ctx));
  CHECK(flat.ok);
  CHECK(flat.square.is_zero());

  Context curved = chart({{"x", 0}, {"theta", 1}, {"psi", 2}}, 3, 1);
  Derivation q = Derivation::make(
      curved, 1,
      {GradedPolynomial::variable(curved, 1), GradedPolynomial::variable(curved, 2),
       GradedPolynomial::zero(curved)});
  QCheck bad = check_q(q);
  CHECK_FALSE(bad.ok);
  CHECK(bad.square.value(0) == GradedPolynomial::variable(curved, 2));
  CHECK(bad.square.degree() == 2);

  CHECK_THROWS_AS(check_q(Derivation::zero(ctx, 0)), UsageError);
}

TEST_CASE("curvature reads base projections of degree -1 images") {
  Context ctx = flat_chart();
  auto kappa = curvature(flat_q(ctx));
  REQUIRE(kappa.size() == 1);
  CHECK(kappa[0].first == 2);
  CHECK(kappa[0].second ==
        GradedPolynomial::variable(ctx, 0) * GradedPolynomial::variable(ctx, 1));

  Context bare = chart({{"x", 0}, {"theta", 1}}, 2, 1);
  CHECK(curvature(Derivation::zero(bare, 1)).empty());
}

TEST_CASE("negative_part strips positive variables") {
  Context ctx = flat_chart();
  NegativePart neg = negative_part(flat_q(ctx));
  CHECK(neg.kept == std::vector<int>{0, 1, 2});
  CHECK(neg.ctx.size() == 3);
  CHECK(neg.ctx.name(2) == "xi");
  CHECK(neg.q.value(0).is_zero());  // x*theta dies with theta
  CHECK(neg.q.value(2) ==
        GradedPolynomial::variable(neg.ctx, 0) * GradedPolynomial::variable(neg.ctx, 1));
  CHECK(check_q(neg.q).ok);
}

TEST_CASE("zero locus of the basic curved extension") {
  Context ctx = flat_chart();
  ZeroLocusDGA dga = zero_locus_dga(flat_q(ctx));
  CHECK(dga.ctx.size() == 3);  // x, y, theta survive
  REQUIRE(dga.ideal.size() == 1);
  CHECK(dga.ideal[0] ==
        GradedPolynomial::variable(dga.ctx, 0) * GradedPolynomial::variable(dga.ctx, 1));
  // 10 base jets at order 3, minus the 3 independent multiples of x*y
  CHECK(dga.algebra_dim == 7);
  CHECK(dga.origin_on_zero_locus);
  CHECK(dga.differential.value(0) ==
        GradedPolynomial::variable(dga.ctx, 0) * GradedPolynomial::variable(dga.ctx, 2));
  CHECK(dga.differential.value(1).is_zero());
  CHECK(dga.differential.value(2).is_zero());
}

TEST_CASE("zero locus with a unit curvature is empty") {
  Context ctx = chart({{"x", 0}, {"eta", -1}, {"theta", 1}}, 3, 2);
  Derivation q = Derivation::make(
      ctx, 1,
      {GradedPolynomial::variable(ctx, 2), GradedPolynomial::constant(ctx, 1),
       GradedPolynomial::zero(ctx)});
  ZeroLocusDGA dga = zero_locus_dga(q);
  CHECK_FALSE(dga.origin_on_zero_locus);
  CHECK(dga.algebra_dim == 0);
  CHECK(dga.differential.is_zero());
}

TEST_CASE("ideal_reduced kills exactly the multiples") {
  Context ctx = chart({{"x", 0}, {"y", 0}}, 3, 1);
  GradedPolynomial x = GradedPolynomial::variable(ctx, 0);
  GradedPolynomial y = GradedPolynomial::variable(ctx, 1);
  std::vector<GradedPolynomial> gens = {x * y};
  CHECK(ideal_reduced(x * x * y + y, gens) == y);
  CHECK(ideal_reduced(x * y, gens).is_zero());
  CHECK(ideal_reduced(x + y, gens) == x + y);

  Context other = chart({{"x", 0}, {"y", 0}}, 2, 1);
  std::vector<GradedPolynomial> foreign = {GradedPolynomial::variable(other, 0)};
  CHECK_THROWS_AS(ideal_reduced(x, foreign), UsageError);

  Context graded = chart({{"x", 0}, {"theta", 1}}, 2, 1);
  std::vector<GradedPolynomial> nonbase = {GradedPolynomial::variable(graded, 1)};
  CHECK_THROWS_AS(ideal_reduced(GradedPolynomial::variable(graded, 0), nonbase), UsageError);
}

TEST_CASE("anchor matrix at the origin") {
  // unit curvature model: q(x) = theta contributes a unit anchor entry
  Context ctx = chart({{"x", 0}, {"eta", -1}, {"theta", 1}}, 3, 2);
  Derivation q = Derivation::make(
      ctx, 1,
      {GradedPolynomial::variable(ctx, 2), GradedPolynomial::constant(ctx, 1),
       GradedPolynomial::zero(ctx)});
  AnchorReport a = anchor(q);
  CHECK(a.rows == std::vector<int>{0});
  CHECK(a.cols == std::vector<int>{2});
  CHECK(a.matrix.at(0, 0) == Rational(1));
  CHECK(a.rank == 1);
  CHECK_FALSE(a.origin_on_zero_locus);  // kappa has a constant term

  // the curved extension's anchor vanishes at the origin: q(x) = x*theta
  AnchorReport b = anchor(flat_q(flat_chart()));
  CHECK(b.rows == std::vector<int>{0, 1});
  CHECK(b.cols == std::vector<int>{3});
  CHECK(b.rank == 0);
  CHECK(b.origin_on_zero_locus);
}
