// Exact rational scalars. All coefficient arithmetic in the engine is exact;
// nothing is ever rounded, so equality of results is meaningful equality.

#ifndef GRADEDQ_RATIONAL_HPP
#define GRADEDQ_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gradedq {

using Rational = mpq_class;

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string to_string(const Rational& r) {
  return r.get_str();
}

// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument
// on malformed input or zero denominator.
inline Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || text[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("malformed rational literal: " + text);
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational literal: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace gradedq

#endif
