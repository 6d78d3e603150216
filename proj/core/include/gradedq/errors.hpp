// Error taxonomy. MathError signals a mathematically meaningful failure
// (precondition violated, series fails to terminate, unsolvable stage, ...);
// UsageError signals malformed input (bad syntax, unknown variable, ...).
// The CLI maps these to distinct exit codes.

#ifndef GRADEDQ_ERRORS_HPP
#define GRADEDQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gradedq {

class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gradedq

#endif
