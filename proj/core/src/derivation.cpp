#include "gradedq/derivation.hpp"

#include <cassert>

#include "gradedq/errors.hpp"

namespace gradedq {

namespace {

void check_value(const Context& ctx, int degree, int var, const GradedPolynomial& v) {
  if (v.is_zero()) return;
  if (!(v.context() == ctx)) throw UsageError("derivation value built over a different context");
  int d = 0;
  if (!v.is_homogeneous(Grading::Total, &d) || d != ctx.degree(var) + degree) {
    throw UsageError("derivation value for " + ctx.name(var) +
                     " must be homogeneous of total degree " +
                     std::to_string(ctx.degree(var) + degree));
  }
}

}  // namespace

Derivation Derivation::zero(const Context& ctx, int degree) {
  std::vector<GradedPolynomial> vals(ctx.size(), GradedPolynomial::zero(ctx));
  return Derivation(ctx, degree, std::move(vals));
}

Derivation Derivation::make(const Context& ctx, int degree, std::vector<GradedPolynomial> values) {
  if (static_cast<int>(values.size()) != ctx.size())
    throw UsageError("derivation needs one value per variable");
  for (size_t i = 0; i < values.size(); ++i) {
    check_value(ctx, degree, static_cast<int>(i), values[i]);
  }
  return Derivation(ctx, degree, std::move(values));
}

Derivation Derivation::partial(const Context& ctx, int var) {
  Derivation d = zero(ctx, -ctx.degree(var));
  d.values_[var] = GradedPolynomial::constant(ctx, 1);
  return d;
}

void Derivation::set_value(int var, GradedPolynomial v) {
  check_value(ctx_, degree_, var, v);
  values_[var] = std::move(v);
}

bool Derivation::is_zero() const {
  for (const GradedPolynomial& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

GradedPolynomial Derivation::apply(const GradedPolynomial& p) const {
  if (!(p.context() == ctx_)) throw UsageError("derivation applied across contexts");
  GradedPolynomial out = GradedPolynomial::zero(ctx_);
  const int n = ctx_.size();
  const bool odd_x = (degree_ % 2) != 0;
  for (const auto& [m, c] : p.terms()) {
    int prefix_parity = 0;
    for (int i = 0; i < n; ++i) {
      const uint32_t e = m.exponents[i];
      if (e == 0) continue;
      if (!values_[i].is_zero()) {
        // X(... v^e ...) contributes e * pre * v^{e-1} * X(v) * suf with the
        // Koszul sign of X passing the prefix.
        Monomial pre = Monomial::one(ctx_);
        Monomial suf = Monomial::one(ctx_);
        for (int j = 0; j < i; ++j) pre.exponents[j] = m.exponents[j];
        pre.exponents[i] = e - 1;
        for (int j = i + 1; j < n; ++j) suf.exponents[j] = m.exponents[j];
        Rational coef = c * Rational(static_cast<long>(e));
        if (odd_x && (prefix_parity % 2) != 0) coef = -coef;
        GradedPolynomial contrib = GradedPolynomial::monomial(ctx_, pre, coef);
        contrib = contrib * values_[i];
        contrib = contrib * GradedPolynomial::monomial(ctx_, suf, 1);
        out += contrib;
      }
      prefix_parity += static_cast<int>(e) * ctx_.degree(i);
    }
  }
  return out;
}

Derivation& Derivation::operator+=(const Derivation& o) {
  assert(ctx_ == o.ctx_);
  assert(degree_ == o.degree_ || is_zero() || o.is_zero());
  if (is_zero()) degree_ = o.degree_;
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
  assert(ctx_ == o.ctx_);
  assert(degree_ == o.degree_ || is_zero() || o.is_zero());
  if (is_zero()) degree_ = o.degree_;
  for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
  for (GradedPolynomial& v : values_) v *= c;
  return *this;
}

Derivation Derivation::operator-() const {
  Derivation d = *this;
  d *= Rational(-1);
  return d;
}

bool Derivation::operator==(const Derivation& o) const {
  if (!(ctx_ == o.ctx_)) return false;
  if (is_zero() && o.is_zero()) return true;
  if (degree_ != o.degree_) return false;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] == o.values_[i])) return false;
  }
  return true;
}

Derivation Derivation::negdeg_component(int n) const {
  Derivation out = zero(ctx_, degree_);
  for (size_t i = 0; i < values_.size(); ++i) {
    const int vneg = ctx_.neg_degree(static_cast<int>(i));
    for (const auto& [m, c] : values_[i].terms()) {
      if (negative_degree(ctx_, m) - vneg == n) out.values_[i].add_term(m, c);
    }
  }
  return out;
}

Derivation Derivation::arity_component(int n) const {
  Derivation out = zero(ctx_, degree_);
  for (size_t i = 0; i < values_.size(); ++i) {
    const int vweight = ctx_.degree(static_cast<int>(i)) != 0 ? 1 : 0;
    for (const auto& [m, c] : values_[i].terms()) {
      if (arity(ctx_, m) - vweight == n) out.values_[i].add_term(m, c);
    }
  }
  return out;
}

int Derivation::min_negdeg() const {
  bool seen = false;
  int best = 0;
  for (size_t i = 0; i < values_.size(); ++i) {
    const int vneg = ctx_.neg_degree(static_cast<int>(i));
    for (const auto& [m, c] : values_[i].terms()) {
      (void)c;
      const int n = negative_degree(ctx_, m) - vneg;
      if (!seen || n < best) best = n;
      seen = true;
    }
  }
  return best;
}

int Derivation::max_negdeg() const {
  bool seen = false;
  int best = 0;
  for (size_t i = 0; i < values_.size(); ++i) {
    const int vneg = ctx_.neg_degree(static_cast<int>(i));
    for (const auto& [m, c] : values_[i].terms()) {
      (void)c;
      const int n = negative_degree(ctx_, m) - vneg;
      if (!seen || n > best) best = n;
      seen = true;
    }
  }
  return best;
}

Derivation Derivation::transferred(const Context& target) const {
  Derivation out = zero(target, degree_);
  for (int t = 0; t < target.size(); ++t) {
    const auto s = ctx_.index_of(target.name(t));
    if (!s) continue;
    out.values_[t] = GradedPolynomial::transferred(values_[*s], target);
  }
  return out;
}

std::string Derivation::str() const {
  std::string s;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + values_[i].str() + ") d/d" + ctx_.name(static_cast<int>(i));
  }
  return s.empty() ? "0" : s;
}

Derivation commutator(const Derivation& x, const Derivation& y) {
  assert(x.context() == y.context());
  const int dx = x.degree(), dy = y.degree();
  const bool both_odd = (dx % 2 != 0) && (dy % 2 != 0);
  Derivation out = Derivation::zero(x.context(), dx + dy);
  for (int i = 0; i < x.context().size(); ++i) {
    GradedPolynomial v = x.apply(y.value(i));
    GradedPolynomial w = y.apply(x.value(i));
    if (both_odd) {
      v += w;
    } else {
      v -= w;
    }
    out.set_value(i, std::move(v));
  }
  return out;
}

Derivation scaled(const GradedPolynomial& f, const Derivation& x) {
  assert(f.context() == x.context());
  int df = 0;
  if (!f.is_zero() && !f.is_homogeneous(Grading::Total, &df))
    throw UsageError("scaling a derivation by an inhomogeneous element");
  Derivation out = Derivation::zero(x.context(), df + x.degree());
  for (int i = 0; i < x.context().size(); ++i) {
    if (!x.value(i).is_zero()) out.set_value(i, f * x.value(i));
  }
  return out;
}

}  // namespace gradedq
