// Exponential flows of degree-zero vector fields and their bookkeeping.
//
// A degree-preserving chart automorphism is stored by its images on the
// generators (a substitution). exp_flow(v) sums v^k/k!; truncation makes the
// sum finite whenever the flow converges at all, and a budget guard turns a
// non-terminating sum into a MathError instead of a hang. A FlowLog records
// the generators of a composite e^{v_n} ... e^{v_1} (first step applied
// first) so the whole transformation is replayable and invertible.

#ifndef GRADEDQ_FLOWS_HPP
#define GRADEDQ_FLOWS_HPP

#include <string>
#include <vector>

#include "gradedq/derivation.hpp"

namespace gradedq {

class ChartAutomorphism {
 public:
  static ChartAutomorphism identity(const Context& ctx);
  // Validates: one image per variable, each zero or homogeneous of the
  // variable's total degree.
  static ChartAutomorphism from_images(const Context& ctx, std::vector<GradedPolynomial> images);

  const Context& context() const { return ctx_; }
  const GradedPolynomial& image(int var) const { return images_[var]; }
  const std::vector<GradedPolynomial>& images() const { return images_; }

  GradedPolynomial apply(const GradedPolynomial& p) const;
  // (a.after(b))(p) = a(b(p)).
  ChartAutomorphism after(const ChartAutomorphism& b) const;

  bool operator==(const ChartAutomorphism& o) const;

 private:
  ChartAutomorphism(Context ctx, std::vector<GradedPolynomial> images)
      : ctx_(std::move(ctx)), images_(std::move(images)) {}

  Context ctx_;
  std::vector<GradedPolynomial> images_;
};

// Step budget for exponential sums at the given truncation.
int flow_budget(const Context& ctx);

// e^v as a substitution; v must have total degree 0. Throws MathError when
// the series fails to terminate within the budget.
ChartAutomorphism exp_flow(const Derivation& v);

// e^{ad_v} x = sum ad_v^k(x) / k!, the conjugate e^v x e^{-v}.
Derivation push_forward(const Derivation& v, const Derivation& x);

struct FlowStep {
  Derivation generator;  // degree-0 vector field
  int gain = 0;          // annotated filtration gain of this step (may be 0)
  std::string label;     // which stage of which algorithm produced it
};

class FlowLog {
 public:
  FlowLog() = default;
  explicit FlowLog(const Context& ctx) : ctx_(ctx) {}

  const Context& context() const { return ctx_; }
  const std::vector<FlowStep>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

  // Validates degree 0 and flow termination (the step is test-exponentiated).
  void append(Derivation generator, int gain, std::string label);
  void append(const FlowLog& tail);

  // Composite automorphism e^{v_n} ... e^{v_1}.
  ChartAutomorphism automorphism() const;
  // Log of the inverse: reversed order, negated generators.
  FlowLog inverse() const;
  // Applies every step to x in order: e^{ad_{v_n}} ... e^{ad_{v_1}} x.
  Derivation push_forward(const Derivation& x) const;

 private:
  Context ctx_;
  std::vector<FlowStep> steps_;
};

}  // namespace gradedq

#endif
