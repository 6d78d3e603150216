// Normal forms of homological vector fields around a chart origin:
//
//  * homotopy_alpha / trivialize: when some degree -1 variable has curvature
//    invertible at the origin, the field is conjugated to the pure interior
//    product by its curvature, killing first the filtration components and
//    then the arity components with explicit exponential flows;
//  * contracting_homotopy: the multiplication operator alpha * (.) satisfying
//    q h + h q = id exactly on an interior-product model;
//  * straighten: flow-box normalization of a vector field with a unit
//    coefficient at the origin, by constant shears and repeated integration
//    along the pivot direction;
//  * split_at_point: peels off anchor-rank many contractible pairs
//    theta d/dy from an integrable field, leaving a decoupled residual.
//
// The flow-producing routines work internally one jet order above the input
// (integration along a base direction needs the extra order); the returned
// FlowLog therefore lives in that extended context while every reported
// field is exact at the input truncation.

#ifndef GRADEDQ_NORMAL_FORM_HPP
#define GRADEDQ_NORMAL_FORM_HPP

#include <utility>
#include <vector>

#include "gradedq/flows.hpp"
#include "gradedq/qmanifold.hpp"

namespace gradedq {

// First degree -1 variable whose curvature has a nonzero constant term,
// together with alpha = curvature^{-1} * variable (so q(alpha) = 1 + higher
// filtration). MathError when no such variable exists.
std::pair<int, GradedPolynomial> homotopy_alpha(const Derivation& q);

struct TrivializeResult {
  Derivation final_q;     // the interior-product normal form, input context
  FlowLog log;            // steps in the jet-extended context, first applied first
  ChartAutomorphism substitution;  // inverse-log automorphism: new coordinates in old ones
  GradedPolynomial alpha;  // contraction potential, input context
  int pivot_var = -1;      // degree -1 variable carrying the unit curvature
};
TrivializeResult trivialize(const Derivation& q);

// Checks that q is an interior-product model (it equals its arity -1 part and
// squares to zero) and returns alpha; q(alpha * p) + alpha * q(p) == p then
// holds for every p.
GradedPolynomial contracting_homotopy(const Derivation& q);

struct StraightenResult {
  Derivation straightened;  // d/d(pivot), input context
  FlowLog log;              // jet-extended context
  int pivot = -1;
};
// v must have total degree 0 and a unit constant coefficient at the pivot
// after shear normalization; pivot_var = -1 selects the first base variable
// with a nonzero constant coefficient.
StraightenResult straighten(const Derivation& v, int pivot_var = -1);

struct SplitPair {
  int base_var = -1;   // y
  int fiber_var = -1;  // theta, degree +1
};

struct SplitResult {
  std::vector<SplitPair> pairs;  // in extraction order
  Derivation final_q;            // sum of theta d/dy plus residual, input context
  Derivation residual;           // final_q minus the pair terms, input context
  FlowLog log;                   // jet-extended context
  int anchor_rank = 0;           // of the input field; equals pairs.size()
};
SplitResult split_at_point(const Derivation& q);

}  // namespace gradedq

#endif
