// Text format for problem files and polynomial expressions.
//
// A problem file is a sequence of blocks:
//
//   manifold { x : 0  y : 0  xi : -1  theta : 1 }
//   truncate { jet 3 filtration 4 }
//   Q { x -> theta  xi -> x*y }
//   ideal { x*y; x^2; }
//
// manifold and truncate come first and fix the chart. Derivation blocks are
// named Q, Qprime, delta, qplus (total degree 1) or vf (total degree 0);
// unassigned variables map to zero. Ideal entries end with ';'. Expressions
// use + - * ^ ( ) and rational constants like 3 or -2/5; '#' starts a line
// comment. Every value is checked for homogeneity of the right degree, and
// parse errors carry line and column. Printing a polynomial with str() and
// parsing it back reproduces the polynomial exactly.

#ifndef GRADEDQ_DSL_HPP
#define GRADEDQ_DSL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedq/derivation.hpp"

namespace gradedq {

struct ProblemFile {
  Context ctx;
  std::map<std::string, Derivation> derivations;
  std::vector<GradedPolynomial> ideal;

  bool has_derivation(const std::string& name) const { return derivations.count(name) != 0; }
  const Derivation& derivation(const std::string& name) const;  // UsageError when absent
};

// The overrides replace the truncate block's orders (and make the block
// optional), so one file can be read at several truncations.
ProblemFile parse_problem(const std::string& text, std::optional<int> jet_override = std::nullopt,
                          std::optional<int> filt_override = std::nullopt);

// Parses a single expression over an existing chart.
GradedPolynomial parse_polynomial(const Context& ctx, const std::string& text);

}  // namespace gradedq

#endif
