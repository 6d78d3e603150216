// Staged construction of homological vector fields from their two halves, and
// staged intertwining of two such fields.
//
// construct_q starts from delta + q0 (a resolution differential joined with a
// lift of the zero-locus structure) and repairs the square one filtration
// level at a time: the level-m defect of Q^2 is a cocycle for the adjoint
// action of delta, and a correction of filtration degree m+1 removes it
// without disturbing the levels already cleared. intertwine runs the same
// staircase on the difference of two fields, producing a replayable flow log
// instead of corrections. Every solve runs over the deterministic bases, so
// the chosen corrections and generators are reproducible; obstructed levels
// raise MathError.

#ifndef GRADEDQ_PERTURBATION_HPP
#define GRADEDQ_PERTURBATION_HPP

#include <vector>

#include "gradedq/flows.hpp"
#include "gradedq/qmanifold.hpp"

namespace gradedq {

struct TildeDelta {
  Context ctx;             // resolution chart plus the positive variables
  Derivation delta_tilde;  // delta + q0
  Derivation delta_part;   // the resolution differential on the joined chart
  Derivation q_part;       // filtration-degree-0 lift of the zero-locus differential
};

// Joins a resolution differential (nonpositive chart) with a differential
// graded algebra structure (nonnegative chart sharing the same leading base
// block) into one chart, lifting the latter level by level so the two parts
// anticommute exactly.
TildeDelta assemble_tilde_delta(const Derivation& delta, const Derivation& qplus);

struct ConstructQResult {
  TildeDelta assembled;
  Derivation q;                         // the flat extension, squares to zero
  std::vector<Derivation> corrections;  // staged corrections, filtration degrees 1, 2, ...
};

ConstructQResult construct_q(const Derivation& delta, const Derivation& qplus);

struct IntertwineResult {
  FlowLog log;  // composed flow carrying q onto q_prime
};

// Both fields must square to zero, agree on the resolution part and induce
// the same structure on the curvature zero locus.
IntertwineResult intertwine(const Derivation& q, const Derivation& q_prime);

}  // namespace gradedq

#endif
