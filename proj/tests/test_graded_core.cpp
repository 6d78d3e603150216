#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradedq/basis.hpp"
#include "gradedq/errors.hpp"
#include "gradedq/polynomial.hpp"
#include "support.hpp"

using namespace gradedq;
using gradedq::testing::chart;
using gradedq::testing::poly_of;

namespace {

Context mixed() {
  return chart({{"x", 0}, {"y", 0}, {"eta", -1}, {"mu", -2}, {"theta", 1}, {"psi", 2}}, 3, 4);
}

GradedPolynomial var(const Context& ctx, const std::string& name) {
  return GradedPolynomial::variable(ctx, *ctx.index_of(name));
}

}  // namespace

TEST_CASE("context construction and accessors") {
  Context ctx = mixed();
  CHECK(ctx.size() == 6);
  CHECK(ctx.degree(*ctx.index_of("mu")) == -2);
  CHECK(ctx.neg_degree(*ctx.index_of("mu")) == 2);
  CHECK(ctx.neg_degree(*ctx.index_of("theta")) == 0);
  CHECK(ctx.pos_degree(*ctx.index_of("psi")) == 2);
  CHECK(ctx.is_base(*ctx.index_of("x")));
  CHECK(ctx.is_odd(*ctx.index_of("eta")));
  CHECK(ctx.is_odd(*ctx.index_of("theta")));
  CHECK(!ctx.is_odd(*ctx.index_of("mu")));
  CHECK(!ctx.index_of("nope"));

  CHECK_THROWS_AS(chart({{"x", 0}, {"x", 1}}, 2, 2), UsageError);
  CHECK_THROWS_AS(chart({{"x", 0}}, -1, 2), UsageError);
  CHECK_THROWS_AS(chart({{"x", 0}}, 2, 0), UsageError);

  Context lowered = ctx.with_orders(2, 3);
  CHECK(lowered.jet_order() == 2);
  CHECK(lowered.same_variables(ctx));
  CHECK(!(lowered == ctx));
}

TEST_CASE("restricted and extended charts") {
  Context ctx = mixed();
  std::vector<bool> keep(6, false);
  keep[0] = keep[2] = true;  // x, eta
  Context sub = ctx.restricted(keep);
  CHECK(sub.size() == 2);
  CHECK(sub.name(0) == "x");
  CHECK(sub.name(1) == "eta");

  Context ext = sub.extended({VarDecl{"z", 0}});
  CHECK(ext.size() == 3);
  CHECK(ext.degree(2) == 0);
  CHECK_THROWS_AS(sub.extended({VarDecl{"x", 1}}), UsageError);
}

TEST_CASE("monomial gradings and the degree identity") {
  Context ctx = mixed();
  Monomial m = Monomial::one(ctx);
  m.exponents[0] = 2;  // x^2
  m.exponents[2] = 1;  // eta
  m.exponents[4] = 1;  // theta
  CHECK(total_degree(ctx, m) == 0);
  CHECK(positive_degree(ctx, m) == 1);
  CHECK(negative_degree(ctx, m) == 1);
  CHECK(base_degree(ctx, m) == 2);
  CHECK(arity(ctx, m) == 2);
  CHECK(is_odd(ctx, m) == false);  // eta * theta is even
  CHECK(total_degree(ctx, m) == positive_degree(ctx, m) - negative_degree(ctx, m));
}

TEST_CASE("high-degree function report") {
  // one variable each of degree +5, -4, -7
  Context ctx = chart({{"u", 5}, {"v", -4}, {"w", -7}}, 2, 12);
  GradedPolynomial p = var(ctx, "u") * var(ctx, "v") * var(ctx, "w");
  DegreeReport rep = p.degree_report();
  CHECK(rep.total.homogeneous);
  CHECK(rep.total.value == -6);
  CHECK(rep.positive.value == 5);
  CHECK(rep.negative.value == 11);
  CHECK(rep.arity.value == 3);
}

TEST_CASE("truncation discards high jets and deep filtration") {
  Context ctx = chart({{"x", 0}, {"eta", -1}, {"nu", -1}, {"theta", 1}}, 2, 2);
  GradedPolynomial x = var(ctx, "x");
  CHECK((x * x * x).is_zero());          // jet order 2
  CHECK(!(x * x).is_zero());
  GradedPolynomial deep = var(ctx, "eta") * var(ctx, "nu");
  CHECK(deep.is_zero());                 // negative degree 2 >= filtration 2
  CHECK(!(var(ctx, "eta") * var(ctx, "theta")).is_zero());
}

TEST_CASE("koszul signs") {
  Context ctx = mixed();
  GradedPolynomial eta = var(ctx, "eta"), theta = var(ctx, "theta");
  GradedPolynomial mu = var(ctx, "mu"), x = var(ctx, "x");
  CHECK((eta * eta).is_zero());                  // odd squares vanish
  CHECK((theta * theta).is_zero());
  CHECK(eta * theta == -(theta * eta));          // odd variables anticommute
  CHECK(mu * eta == eta * mu);                   // even graded commutes
  CHECK(x * theta == theta * x);
  CHECK((eta * theta) * (eta * theta) == GradedPolynomial::zero(ctx));
}

TEST_CASE("polynomial arithmetic and components") {
  Context ctx = mixed();
  GradedPolynomial x = var(ctx, "x"), y = var(ctx, "y");
  GradedPolynomial p = (x + y) * (x + y);
  CHECK(p == x * x + Rational(2) * (x * y) + y * y);

  GradedPolynomial q = x + var(ctx, "eta") * var(ctx, "theta");
  CHECK(q.degree_report().total.homogeneous);
  CHECK(q.homogeneous_component(Grading::Arity, 0) == x);
  CHECK(q.jet_component(1) == x);
  CHECK(q.base_projection() == x);
  CHECK(q.positive_to_zero() == x);
  CHECK(!q.is_homogeneous(Grading::Arity));
}

TEST_CASE("substitution respects signs") {
  Context ctx = mixed();
  GradedPolynomial eta = var(ctx, "eta"), theta = var(ctx, "theta"), x = var(ctx, "x");
  // eta -> eta + x*theta' style substitutions stay consistent with products
  std::vector<GradedPolynomial> images;
  for (int i = 0; i < ctx.size(); ++i) images.push_back(GradedPolynomial::variable(ctx, i));
  images[static_cast<size_t>(*ctx.index_of("x"))] = x + eta * theta;
  GradedPolynomial p = x * x;
  GradedPolynomial s = p.substituted(images);
  CHECK(s == (x + eta * theta) * (x + eta * theta));
}

TEST_CASE("series inversion at the truncation order") {
  Context ctx = chart({{"x", 0}}, 3, 1);
  GradedPolynomial x = var(ctx, "x");
  GradedPolynomial one = GradedPolynomial::constant(ctx, 1);
  GradedPolynomial inv = inverted(one + x);
  CHECK(inv == one - x + x * x - x * x * x);
  CHECK(inv * (one + x) == one);
  CHECK_THROWS_AS(inverted(x), MathError);
}

TEST_CASE("derivatives with parity") {
  Context ctx = mixed();
  GradedPolynomial eta = var(ctx, "eta"), theta = var(ctx, "theta"), x = var(ctx, "x");
  int itheta = *ctx.index_of("theta");
  // d/dtheta acts from the left: the eta factor in front contributes a sign
  CHECK((eta * theta).derivative(itheta) == -eta);
  CHECK((theta * eta).derivative(itheta) == eta);
  CHECK((x * x).derivative(*ctx.index_of("x")) == Rational(2) * x);
}

TEST_CASE("monomial basis enumeration is deterministic and complete") {
  Context ctx = chart({{"x", 0}, {"eta", -1}, {"theta", 1}}, 2, 2);
  std::vector<Monomial> deg0 = monomial_basis(ctx, 0);
  // 1, x, x^2, eta*theta, x*eta*theta, x^2*eta*theta
  CHECK(deg0.size() == 6);
  for (const Monomial& m : deg0) CHECK(total_degree(ctx, m) == 0);
  // simplest first: the pure base monomials precede the graded pair
  CHECK(deg0.front().is_one());

  std::vector<Monomial> all = truncated_monomials(ctx, ctx.jet_order());
  CHECK(all.size() == 3u * 2u * 2u);  // x^{0..2} * eta^{0,1} * theta^{0,1}
  for (const Monomial& m : all) CHECK(within_truncation(ctx, m));
}

TEST_CASE("coordinates round-trip through a basis") {
  Context ctx = mixed();
  std::vector<Monomial> basis = monomial_basis(ctx, 0);
  std::map<Monomial, int> index = index_of(basis);
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    GradedPolynomial p = gradedq::testing::random_poly(ctx, 0, rng, 4);
    QVector v = coordinates(p, index, static_cast<int>(basis.size()));
    CHECK(from_coordinates(ctx, basis, v) == p);
  }
}

TEST_CASE("transferred polynomials preserve terms and reject reordering") {
  Context big = mixed();
  Context small = chart({{"x", 0}, {"y", 0}, {"eta", -1}}, 3, 4);
  GradedPolynomial p = var(small, "x") * var(small, "eta");
  GradedPolynomial up = GradedPolynomial::transferred(p, big);
  CHECK(up.str() == p.str());
  CHECK(GradedPolynomial::transferred(up, small) == p);

  Context swapped = chart({{"y", 0}, {"x", 0}, {"eta", -1}}, 3, 4);
  CHECK_THROWS_AS(GradedPolynomial::transferred(p, swapped), UsageError);

  Context missing = chart({{"x", 0}}, 3, 4);
  CHECK_THROWS_AS(GradedPolynomial::transferred(p, missing), UsageError);
}
