#include "doctest.h"

#include "gradedq/errors.hpp"
#include "gradedq/normal_form.hpp"
#include "support.hpp"

using namespace gradedq;
using gradedq::testing::chart;

namespace {

Context basic_chart() { return chart({{"x", 0}, {"eta", -1}, {"theta", 1}}, 3, 2); }

// Q = theta d/dx + d/deta, the standard unit-curvature model.
Derivation basic_q(const Context& ctx) {
  return Derivation::make(ctx, 1,
                          {GradedPolynomial::variable(ctx, 2), GradedPolynomial::constant(ctx, 1),
                           GradedPolynomial::zero(ctx)});
}

// Interior product by random base curvatures, unit at the pivot slot.
Derivation random_interior_model(const Context& ctx, std::mt19937& rng) {
  Derivation q = Derivation::zero(ctx, 1);
  bool unit_placed = false;
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.degree(i) != -1) continue;
    GradedPolynomial kappa = gradedq::testing::random_base_poly(ctx, rng);
    if (!unit_placed) {
      kappa += GradedPolynomial::constant(ctx, 1) - GradedPolynomial::constant(ctx, kappa.constant_term());
      unit_placed = true;
    } else {
      kappa -= GradedPolynomial::constant(ctx, kappa.constant_term());
    }
    q.set_value(i, kappa);
  }
  return q;
}

}  // namespace

TEST_CASE("homotopy_alpha picks the first unit curvature") {
  Context ctx = basic_chart();
  auto [pivot, alpha] = homotopy_alpha(basic_q(ctx));
  CHECK(pivot == 1);
  CHECK(alpha == GradedPolynomial::variable(ctx, 1));
  CHECK(basic_q(ctx).apply(alpha) == GradedPolynomial::constant(ctx, 1));

  // first eta has curvature x (no constant term), second carries the unit
  Context two = chart({{"x", 0}, {"eta1", -1}, {"eta2", -1}, {"theta", 1}}, 3, 3);
  GradedPolynomial x = GradedPolynomial::variable(two, 0);
  Derivation q = Derivation::zero(two, 1);
  q.set_value(1, x);
  q.set_value(2, GradedPolynomial::constant(two, 1) + x);
  auto [p2, a2] = homotopy_alpha(q);
  CHECK(p2 == 2);
  CHECK(q.apply(a2) == GradedPolynomial::constant(two, 1));

  Derivation flat = Derivation::zero(two, 1);
  flat.set_value(1, x * x);  // vanishes at the origin
  CHECK_THROWS_AS(homotopy_alpha(flat), MathError);
  CHECK_THROWS_AS(homotopy_alpha(Derivation::zero(two, 0)), UsageError);
}

TEST_CASE("trivialize the basic model") {
  Context ctx = basic_chart();
  Derivation q = basic_q(ctx);
  TrivializeResult r = trivialize(q);

  CHECK(r.pivot_var == 1);
  CHECK(r.alpha == GradedPolynomial::variable(ctx, 1));
  // final field is the pure interior product d/deta
  CHECK(r.final_q.value(0).is_zero());
  CHECK(r.final_q.value(1) == GradedPolynomial::constant(ctx, 1));
  CHECK(r.final_q.value(2).is_zero());

  // the log replays the input onto the final field
  const Context& lctx = r.log.context();
  CHECK(lctx.jet_order() == ctx.jet_order() + 1);
  Derivation replayed = r.log.push_forward(q.transferred(lctx)).transferred(ctx);
  CHECK(replayed == r.final_q);

  // frozen substitution: x -> x - eta*theta, graded variables fixed
  const Context& sctx = r.substitution.context();
  GradedPolynomial sx = GradedPolynomial::variable(sctx, 0);
  GradedPolynomial seta = GradedPolynomial::variable(sctx, 1);
  GradedPolynomial stheta = GradedPolynomial::variable(sctx, 2);
  CHECK(r.substitution.image(0) == sx - seta * stheta);
  CHECK(r.substitution.image(1) == seta);
  CHECK(r.substitution.image(2) == stheta);
}

TEST_CASE("trivialize recovers the interior product from gauged models") {
  Context ctx = chart({{"x", 0}, {"y", 0}, {"eta", -1}, {"theta", 1}}, 2, 2);
  std::mt19937 rng(31);
  int moved = 0;
  for (int t = 0; t < 10; ++t) {
    Derivation model = random_interior_model(ctx, rng);
    Derivation w = gradedq::testing::random_flow_generator(ctx, rng);
    Derivation q = push_forward(w, model);
    if (!(q == model)) ++moved;
    REQUIRE(check_q(q).ok);

    TrivializeResult r = trivialize(q);
    // output equals the interior product by the input's own curvature
    CHECK(r.final_q == r.final_q.arity_component(-1));
    for (const auto& [var, kappa] : curvature(q)) CHECK(r.final_q.value(var) == kappa);
    for (int i = 0; i < ctx.size(); ++i)
      if (ctx.degree(i) != -1) CHECK(r.final_q.value(i).is_zero());
    Derivation replayed = r.log.push_forward(q.transferred(r.log.context())).transferred(ctx);
    CHECK(replayed == r.final_q);
  }
  CHECK(moved >= 5);  // the gauge actually disturbed most inputs
}

TEST_CASE("trivialize rejects curved or stuck inputs") {
  Context curved = chart({{"x", 0}, {"eta", -1}, {"theta", 1}, {"psi", 2}}, 3, 2);
  Derivation q = Derivation::zero(curved, 1);
  q.set_value(0, GradedPolynomial::variable(curved, 2));
  q.set_value(2, GradedPolynomial::variable(curved, 3));  // q(theta) = psi curves it
  q.set_value(1, GradedPolynomial::constant(curved, 1));
  CHECK_THROWS_AS(trivialize(q), MathError);

  Context flat = chart({{"x", 0}, {"eta", -1}}, 3, 2);
  Derivation vanishing = Derivation::zero(flat, 1);
  vanishing.set_value(1, GradedPolynomial::variable(flat, 0));  // curvature x, no unit
  CHECK_THROWS_AS(trivialize(vanishing), MathError);
}

TEST_CASE("contracting homotopy is exact on the model") {
  Context ctx = basic_chart();
  Derivation q = trivialize(basic_q(ctx)).final_q;
  GradedPolynomial alpha = contracting_homotopy(q);
  CHECK(q.apply(alpha) == GradedPolynomial::constant(ctx, 1));
  for (const Monomial& m : gradedq::testing::all_monomials(ctx)) {
    GradedPolynomial p = GradedPolynomial::monomial(ctx, m, 1);
    CHECK(q.apply(alpha * p) + alpha * q.apply(p) == p);
  }

  // rejects fields that are not interior products or have no unit
  CHECK_THROWS_AS(contracting_homotopy(basic_q(ctx)), MathError);
  Derivation no_unit = Derivation::zero(ctx, 1);
  no_unit.set_value(1, GradedPolynomial::variable(ctx, 0));
  CHECK_THROWS_AS(contracting_homotopy(no_unit), MathError);
}

TEST_CASE("straighten unit and non-unit coefficient fields") {
  Context ctx = chart({{"x", 0}, {"y", 0}}, 3, 1);
  GradedPolynomial x = GradedPolynomial::variable(ctx, 0);

  Derivation v = Derivation::zero(ctx, 0);
  v.set_value(0, GradedPolynomial::constant(ctx, 1) + x);  // (1+x) d/dx
  StraightenResult r = straighten(v);
  CHECK(r.pivot == 0);
  CHECK(r.straightened == Derivation::partial(ctx, 0));
  Derivation replayed = r.log.push_forward(v.transferred(r.log.context())).transferred(ctx);
  CHECK(replayed == r.straightened);

  // non-unit constant: the shear factorization needs the second variable
  Derivation w = Derivation::zero(ctx, 0);
  w.set_value(0, GradedPolynomial::constant(ctx, 2));
  CHECK(straighten(w).straightened == Derivation::partial(ctx, 0));

  Context lone = chart({{"x", 0}}, 3, 1);
  Derivation lw = Derivation::zero(lone, 0);
  lw.set_value(0, GradedPolynomial::constant(lone, 2));
  CHECK_THROWS_AS(straighten(lw), MathError);

  Derivation stuck = Derivation::zero(ctx, 0);
  stuck.set_value(0, x);  // vanishes at the origin
  CHECK_THROWS_AS(straighten(stuck), MathError);
  Context odd_ctx = chart({{"x", 0}, {"theta", 1}}, 3, 1);
  Derivation odd = Derivation::zero(odd_ctx, 1);
  odd.set_value(0, GradedPolynomial::variable(odd_ctx, 1));  // theta d/dx has degree 1
  CHECK_THROWS_AS(straighten(odd), UsageError);
  CHECK_THROWS_AS(straighten(v, 5), UsageError);
}

TEST_CASE("split extracts the unit pair") {
  Context ctx = chart({{"y", 0}, {"theta", 1}}, 6, 1);
  GradedPolynomial y = GradedPolynomial::variable(ctx, 0);
  GradedPolynomial theta = GradedPolynomial::variable(ctx, 1);
  Derivation q = Derivation::zero(ctx, 1);
  q.set_value(0, (GradedPolynomial::constant(ctx, 1) + y) * theta);
  REQUIRE(check_q(q).ok);

  SplitResult r = split_at_point(q);
  CHECK(r.anchor_rank == 1);
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].base_var == 0);
  CHECK(r.pairs[0].fiber_var == 1);
  CHECK(r.final_q.value(0) == theta);
  CHECK(r.final_q.value(1).is_zero());
  CHECK(r.residual.is_zero());
  Derivation replayed = r.log.push_forward(q.transferred(r.log.context())).transferred(ctx);
  CHECK(replayed == r.final_q);
}

TEST_CASE("split leaves a decoupled residual") {
  Context ctx = chart({{"x", 0}, {"y", 0}, {"theta", 1}, {"psi", 1}}, 3, 1);
  GradedPolynomial x = GradedPolynomial::variable(ctx, 0);
  GradedPolynomial theta = GradedPolynomial::variable(ctx, 2);
  GradedPolynomial psi = GradedPolynomial::variable(ctx, 3);
  Derivation q = Derivation::zero(ctx, 1);
  q.set_value(0, x * x * psi);
  q.set_value(1, theta);
  REQUIRE(check_q(q).ok);

  SplitResult r = split_at_point(q);
  CHECK(r.anchor_rank == 1);
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].base_var == 1);
  CHECK(r.pairs[0].fiber_var == 2);
  CHECK(r.residual.value(0) == x * x * psi);
  CHECK(r.residual.value(1).is_zero());
  CHECK(check_q(r.residual).ok);
  CHECK(anchor(r.residual).rank == 0);

  // two independent pairs come out in column order
  Context two = chart({{"y1", 0}, {"y2", 0}, {"t1", 1}, {"t2", 1}}, 3, 1);
  Derivation p = Derivation::zero(two, 1);
  p.set_value(0, GradedPolynomial::variable(two, 2));
  p.set_value(1, (GradedPolynomial::constant(two, 1) + GradedPolynomial::variable(two, 1)) *
                     GradedPolynomial::variable(two, 3));
  SplitResult r2 = split_at_point(p);
  CHECK(r2.anchor_rank == 2);
  REQUIRE(r2.pairs.size() == 2);
  CHECK(r2.pairs[0].base_var == 0);
  CHECK(r2.pairs[0].fiber_var == 2);
  CHECK(r2.pairs[1].base_var == 1);
  CHECK(r2.pairs[1].fiber_var == 3);
  CHECK(r2.residual.is_zero());
}
