#include "gradedq/flows.hpp"

#include <cassert>

#include "gradedq/errors.hpp"

namespace gradedq {

ChartAutomorphism ChartAutomorphism::identity(const Context& ctx) {
  std::vector<GradedPolynomial> images;
  images.reserve(static_cast<size_t>(ctx.size()));
  for (int i = 0; i < ctx.size(); ++i) images.push_back(GradedPolynomial::variable(ctx, i));
  return ChartAutomorphism(ctx, std::move(images));
}

ChartAutomorphism ChartAutomorphism::from_images(const Context& ctx,
                                                 std::vector<GradedPolynomial> images) {
  if (static_cast<int>(images.size()) != ctx.size())
    throw UsageError("substitution needs one image per variable");
  for (int i = 0; i < ctx.size(); ++i) {
    const GradedPolynomial& im = images[static_cast<size_t>(i)];
    if (im.is_zero()) continue;
    if (!(im.context() == ctx)) throw UsageError("substitution image built over a different context");
    int d = 0;
    if (!im.is_homogeneous(Grading::Total, &d) || d != ctx.degree(i)) {
      throw UsageError("substitution image for " + ctx.name(i) +
                       " must be homogeneous of total degree " + std::to_string(ctx.degree(i)));
    }
  }
  return ChartAutomorphism(ctx, std::move(images));
}

GradedPolynomial ChartAutomorphism::apply(const GradedPolynomial& p) const {
  if (!(p.context() == ctx_)) throw UsageError("substitution applied across contexts");
  return p.substituted(images_);
}

ChartAutomorphism ChartAutomorphism::after(const ChartAutomorphism& b) const {
  assert(ctx_ == b.ctx_);
  std::vector<GradedPolynomial> images;
  images.reserve(images_.size());
  for (const GradedPolynomial& im : b.images_) images.push_back(apply(im));
  return ChartAutomorphism(ctx_, std::move(images));
}

bool ChartAutomorphism::operator==(const ChartAutomorphism& o) const {
  return ctx_ == o.ctx_ && images_ == o.images_;
}

int flow_budget(const Context& ctx) { return ctx.jet_order() + 2 * ctx.filtration_order() + 8; }

ChartAutomorphism exp_flow(const Derivation& v) {
  if (v.degree() != 0 && !v.is_zero())
    throw UsageError("flows are generated by degree-0 vector fields");
  const Context& ctx = v.context();
  std::vector<GradedPolynomial> images, power;
  for (int i = 0; i < ctx.size(); ++i) {
    images.push_back(GradedPolynomial::variable(ctx, i));
    power.push_back(images.back());
  }
  const int budget = flow_budget(ctx);
  Rational factorial(1);
  for (int k = 1;; ++k) {
    bool all_zero = true;
    factorial *= Rational(k);
    for (int i = 0; i < ctx.size(); ++i) {
      power[static_cast<size_t>(i)] = v.apply(power[static_cast<size_t>(i)]);
      if (!power[static_cast<size_t>(i)].is_zero()) {
        all_zero = false;
        images[static_cast<size_t>(i)] += Rational(1) / factorial * power[static_cast<size_t>(i)];
      }
    }
    if (all_zero) break;
    if (k >= budget)
      throw MathError("exponential flow does not terminate at this truncation");
  }
  return ChartAutomorphism::from_images(ctx, std::move(images));
}

Derivation push_forward(const Derivation& v, const Derivation& x) {
  if (v.degree() != 0 && !v.is_zero())
    throw UsageError("flows are generated by degree-0 vector fields");
  assert(v.context() == x.context());
  Derivation acc = x;
  Derivation power = x;
  const int budget = flow_budget(v.context());
  Rational factorial(1);
  for (int k = 1;; ++k) {
    power = commutator(v, power);
    if (power.is_zero()) break;
    factorial *= Rational(k);
    acc += Rational(1) / factorial * power;
    if (k >= budget)
      throw MathError("adjoint flow does not terminate at this truncation");
  }
  return acc;
}

void FlowLog::append(Derivation generator, int gain, std::string label) {
  if (!(generator.context() == ctx_)) throw UsageError("flow step built over a different context");
  exp_flow(generator);  // validates degree and termination up front
  steps_.push_back(FlowStep{std::move(generator), gain, std::move(label)});
}

void FlowLog::append(const FlowLog& tail) {
  for (const FlowStep& s : tail.steps_) append(s.generator, s.gain, s.label);
}

ChartAutomorphism FlowLog::automorphism() const {
  ChartAutomorphism phi = ChartAutomorphism::identity(ctx_);
  for (const FlowStep& s : steps_) phi = exp_flow(s.generator).after(phi);
  return phi;
}

FlowLog FlowLog::inverse() const {
  FlowLog inv(ctx_);
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    inv.append(-it->generator, it->gain, it->label + ":inv");
  }
  return inv;
}

Derivation FlowLog::push_forward(const Derivation& x) const {
  Derivation out = x;
  for (const FlowStep& s : steps_) out = gradedq::push_forward(s.generator, out);
  return out;
}

}  // namespace gradedq
