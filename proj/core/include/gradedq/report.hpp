// Versioned JSON serialization of the library's structures. Every function
// returns (or accepts) compact JSON text, with rationals and polynomials
// rendered as exact strings, so serialized results compare bit for bit and a
// parsed flow log replays to exactly the automorphism that was logged.

#ifndef GRADEDQ_REPORT_HPP
#define GRADEDQ_REPORT_HPP

#include <string>

#include "gradedq/flows.hpp"
#include "gradedq/linalg.hpp"

namespace gradedq {

std::string context_json(const Context& ctx);
std::string polynomial_json(const GradedPolynomial& p);  // a JSON string literal
std::string derivation_json(const Derivation& d);        // degree plus nonzero values
std::string automorphism_json(const ChartAutomorphism& a);
std::string matrix_json(const QMatrix& m);               // rows of rational strings
std::string flowlog_json(const FlowLog& log);            // self-contained, carries its chart

Context context_from_json(const std::string& text);
FlowLog flowlog_from_json(const std::string& text);

}  // namespace gradedq

#endif
