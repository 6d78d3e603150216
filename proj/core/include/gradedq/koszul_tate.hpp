// Koszul-Tate resolutions of a base ideal at fixed truncation orders, and the
// (co)homological bookkeeping around them.
//
// The differential raises total degree by one and never lowers the base jet
// degree of a monomial. Negative-degree cohomology is therefore computed on a
// jet window: chains are restricted to base degree <= W = jet_order - D,
// where D is the largest jet degree appearing among the differential's
// values, so that no cocycle or boundary inside the window is damaged by
// truncation. Degree-zero cohomology is the plain quotient of truncated jets
// by the ideal span.
//
// kt_build adjoins one degree -1 generator per ideal generator, then for
// k = 1 .. depth-1 adjoins module generators killing the windowed cohomology
// at degree -k, one level deeper each round; it stops early when a level is
// already clear (complete intersections) and errors when the truncation
// orders cannot host the next level.

#ifndef GRADEDQ_KOSZUL_TATE_HPP
#define GRADEDQ_KOSZUL_TATE_HPP

#include <vector>

#include "gradedq/derivation.hpp"
#include "gradedq/linalg.hpp"
#include "gradedq/monomial.hpp"

namespace gradedq {

struct KTBuildResult {
  Context ctx;                            // base variables plus adjoined generators
  Derivation delta;                       // the resolution differential
  std::vector<GradedPolynomial> ideal;    // the generators, over ctx
  std::vector<int> adjoined;              // indices of adjoined variables
  std::vector<int> level_counts;          // adjoined generators per level (level k has degree -k)
  int depth = 0;                          // deepest |degree| adjoined
  int h0_dim = 0;                         // dim jets / ideal
  int window = 0;                         // final jet window W
};

// base_ctx must contain only degree-0 variables; the ideal generators are
// nonzero base polynomials over it; depth >= 1 caps the deepest generator
// degree adjoined.
KTBuildResult kt_build(const Context& base_ctx, const std::vector<GradedPolynomial>& ideal,
                       int depth);

struct CohomologyReport {
  int degree = 0;
  int dim = 0;
  std::vector<GradedPolynomial> representatives;  // reduced modulo boundaries
  bool windowed = false;
  int window = 0;        // chain window used (jet order when not windowed)
  bool reliable = true;  // false when the window degenerated and the naive
                         // dimensions are reported as a flagged fallback
};

// Cohomology of the polynomial complex of delta at one total degree:
// windowed below zero, naive otherwise. delta must square to zero.
CohomologyReport complex_cohomology(const Derivation& delta, int degree);

struct KTVerifyReport {
  bool square_zero = false;
  bool resolution_shaped = false;  // values vanish outside the negative generators
  int window = 0;
  bool window_reliable = true;
  int h0_dim = 0;
  std::vector<int> h_dims;  // windowed dims at degrees -1, -2, ... down to the deepest level
  bool acyclic = false;     // all listed negative-degree dims vanish
};
KTVerifyReport kt_verify(const Derivation& delta);

struct VectorFieldCohomologyReport {
  int degree = 0;
  int dim = 0;
  std::vector<Derivation> representatives;
};

// Cohomology of the adjoint action [delta, -] on derivations at one total
// degree, over the full truncated spaces.
VectorFieldCohomologyReport advf_cohomology(const Derivation& delta, int degree);

struct LinearComplexReport {
  int algebra_dim = 0;                 // dim of (truncated jets)/(ideal)
  std::vector<Monomial> algebra_basis;  // representative monomials
  std::vector<std::vector<int>> level_vars;  // level 0: base vars; level k: degree -k vars
  std::vector<QMatrix> maps;           // maps[k]: level k+1 -> level k over the quotient algebra
  std::vector<int> ranks;              // rank of maps[k]
  std::vector<int> homology_dims;      // positions 0 .. deepest level
};

// Linear strand of the resolution: generator-linear coefficients of delta
// reduced modulo the ideal, with the curvature Jacobian in lowest position.
LinearComplexReport linearization(const Derivation& delta);

// Extends a base vector field x0 (degree 0, values on base variables only) to
// the whole resolution so that it commutes with delta; values are solved
// level by level with deterministic pivoting. MathError when obstructed.
Derivation lift_derivation(const Derivation& delta, const Derivation& x0);

}  // namespace gradedq

#endif
