// Homological vector fields on a truncated graded chart and the first-order
// data extracted from them: the square (integrability witness), the curvature
// functions attached to degree -1 generators, the restriction to nonpositive
// variables, the differential graded algebra induced on the curvature zero
// locus, and the anchor matrix pairing base directions with degree +1
// generators.

#ifndef GRADEDQ_QMANIFOLD_HPP
#define GRADEDQ_QMANIFOLD_HPP

#include <utility>
#include <vector>

#include "gradedq/derivation.hpp"
#include "gradedq/linalg.hpp"

namespace gradedq {

struct QCheck {
  bool ok = false;
  Derivation square;  // q applied twice, as a degree-2 derivation
};

// q must be homogeneous of total degree 1 (UsageError otherwise).
QCheck check_q(const Derivation& q);

// Pairs (variable index, base projection of q(variable)) over the degree -1
// variables, in declaration order.
std::vector<std::pair<int, GradedPolynomial>> curvature(const Derivation& q);

struct NegativePart {
  Context ctx;          // nonpositive variables only
  Derivation q;         // values with positive variables sent to zero
  std::vector<int> kept;  // original indices of the surviving variables
};
NegativePart negative_part(const Derivation& q);

struct ZeroLocusDGA {
  Context ctx;                        // base and positive variables only
  std::vector<GradedPolynomial> ideal;  // curvature generators, on ctx
  Derivation differential;            // induced differential, reduced mod the ideal
  int algebra_dim = 0;                // dimension of (truncated jets)/(ideal)
  bool origin_on_zero_locus = true;   // false when a generator has a constant term
};
ZeroLocusDGA zero_locus_dga(const Derivation& q);

// Reduces every base-coefficient block of p modulo the span of truncated jet
// multiples of the generators (all on p's context).
GradedPolynomial ideal_reduced(const GradedPolynomial& p,
                               const std::vector<GradedPolynomial>& gens);

struct AnchorReport {
  std::vector<int> rows;  // base variable indices
  std::vector<int> cols;  // degree +1 variable indices
  QMatrix matrix;         // entry (r, c): coefficient of col variable in q(row variable), at the origin
  int rank = 0;
  bool origin_on_zero_locus = true;
};
AnchorReport anchor(const Derivation& q);

}  // namespace gradedq

#endif
