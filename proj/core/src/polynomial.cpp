#include "gradedq/polynomial.hpp"

#include "gradedq/errors.hpp"

namespace gradedq {

GradedPolynomial GradedPolynomial::constant(const Context& ctx, const Rational& c) {
  GradedPolynomial p(ctx);
  p.add_term(Monomial::one(ctx), c);
  return p;
}

GradedPolynomial GradedPolynomial::variable(const Context& ctx, int i) {
  GradedPolynomial p(ctx);
  p.add_term(Monomial::variable(ctx, i), 1);
  return p;
}

GradedPolynomial GradedPolynomial::monomial(const Context& ctx, const Monomial& m, const Rational& c) {
  GradedPolynomial p(ctx);
  p.add_term(m, c);
  return p;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (!within_truncation(ctx_, m)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
  if (!(ctx_ == o.ctx_)) throw UsageError("polynomial context mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
  if (!(ctx_ == o.ctx_)) throw UsageError("polynomial context mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial p = *this;
  for (auto& [m, v] : p.terms_) v = -v;
  return p;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  if (!(a.ctx_ == b.ctx_)) throw UsageError("polynomial context mismatch");
  const Context& ctx = a.ctx_;
  GradedPolynomial r(ctx);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      int sign = product_sign(ctx, ma, mb);
      if (!sign) continue;
      Monomial m = ma;
      for (int i = 0; i < ctx.size(); ++i) m.exponents[static_cast<size_t>(i)] += mb.exponent(i);
      if (!within_truncation(ctx, m)) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(m, c);
    }
  }
  return r;
}

namespace {

int grading_of(const Context& ctx, const Monomial& m, Grading g) {
  switch (g) {
    case Grading::Total: return total_degree(ctx, m);
    case Grading::Positive: return positive_degree(ctx, m);
    case Grading::Negative: return negative_degree(ctx, m);
    case Grading::Arity: return arity(ctx, m);
  }
  return 0;
}

}  // namespace

DegreeReport GradedPolynomial::degree_report() const {
  DegreeReport r;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int t = total_degree(ctx_, m);
    int p = positive_degree(ctx_, m);
    int n = negative_degree(ctx_, m);
    int a = arity(ctx_, m);
    if (first) {
      r.total.value = t;
      r.positive.value = p;
      r.negative.value = n;
      r.arity.value = a;
      first = false;
    } else {
      if (t != r.total.value) r.total.homogeneous = false;
      if (p != r.positive.value) r.positive.homogeneous = false;
      if (n != r.negative.value) r.negative.homogeneous = false;
      if (a != r.arity.value) r.arity.homogeneous = false;
    }
  }
  return r;
}

bool GradedPolynomial::is_homogeneous(Grading g, int* value) const {
  bool first = true;
  int v = 0;
  for (const auto& [m, c] : terms_) {
    int d = grading_of(ctx_, m, g);
    if (first) {
      v = d;
      first = false;
    } else if (d != v) {
      return false;
    }
  }
  if (value) *value = v;
  return true;
}

GradedPolynomial GradedPolynomial::homogeneous_component(Grading g, int n) const {
  GradedPolynomial r(ctx_);
  for (const auto& [m, c] : terms_)
    if (grading_of(ctx_, m, g) == n) r.terms_.emplace(m, c);
  return r;
}

GradedPolynomial GradedPolynomial::jet_component(int n) const {
  GradedPolynomial r(ctx_);
  for (const auto& [m, c] : terms_)
    if (base_degree(ctx_, m) == n) r.terms_.emplace(m, c);
  return r;
}

GradedPolynomial GradedPolynomial::derivative(int i) const {
  GradedPolynomial r(ctx_);
  for (const auto& [m, c] : terms_) {
    uint32_t e = m.exponent(i);
    if (!e) continue;
    Monomial d = m;
    --d.exponents[static_cast<size_t>(i)];
    Rational coeff = c * static_cast<long>(e);
    if (derivative_sign(ctx_, m, i) < 0) coeff = -coeff;
    r.add_term(d, coeff);
  }
  return r;
}

GradedPolynomial GradedPolynomial::substituted(const std::vector<GradedPolynomial>& images) const {
  if (static_cast<int>(images.size()) != ctx_.size())
    throw UsageError("substitution needs one image per variable");
  const Context& target = images.empty() ? ctx_ : images.front().context();
  GradedPolynomial r(target);
  for (const auto& [m, c] : terms_) {
    GradedPolynomial term = GradedPolynomial::constant(target, c);
    for (int i = 0; i < ctx_.size() && !term.is_zero(); ++i)
      for (uint32_t k = 0; k < m.exponent(i); ++k) term = term * images[static_cast<size_t>(i)];
    r += term;
  }
  return r;
}

GradedPolynomial GradedPolynomial::transferred(const GradedPolynomial& p, const Context& target) {
  if (p.ctx_ == target) return p;
  std::vector<int> map(static_cast<size_t>(p.ctx_.size()), -1);
  int last = -1;
  for (int i = 0; i < p.ctx_.size(); ++i)
    if (auto j = target.index_of(p.ctx_.var(i).name)) {
      if (target.degree(*j) != p.ctx_.degree(i))
        throw UsageError("variable '" + p.ctx_.var(i).name + "' changes degree between contexts");
      // Shared variables must keep their relative order, otherwise exponent
      // vectors would silently denote a different (Koszul-signed) element.
      if (*j <= last) throw UsageError("contexts order shared variables differently");
      last = *j;
      map[static_cast<size_t>(i)] = *j;
    }
  GradedPolynomial r(target);
  for (const auto& [m, c] : p.terms_) {
    Monomial t = Monomial::one(target);
    for (int i = 0; i < p.ctx_.size(); ++i) {
      if (!m.exponent(i)) continue;
      if (map[static_cast<size_t>(i)] < 0)
        throw UsageError("variable '" + p.ctx_.var(i).name + "' missing from target context");
      t.exponents[static_cast<size_t>(map[static_cast<size_t>(i)])] = m.exponent(i);
    }
    r.add_term(t, c);
  }
  return r;
}

GradedPolynomial GradedPolynomial::base_projection() const {
  return homogeneous_component(Grading::Arity, 0);
}

GradedPolynomial GradedPolynomial::positive_to_zero() const {
  GradedPolynomial r(ctx_);
  for (const auto& [m, c] : terms_)
    if (positive_degree(ctx_, m) == 0) r.terms_.emplace(m, c);
  return r;
}

Rational GradedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPolynomial::constant_term() const {
  return coefficient(Monomial::one(ctx_));
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += to_string(ctx_, m);
    }
  }
  return s;
}

GradedPolynomial inverted(const GradedPolynomial& p) {
  const Context& ctx = p.context();
  Rational c = p.constant_term();
  if (c == 0) throw MathError("polynomial has no constant term, not invertible at truncation");
  // p = c(1 + u); 1/p = (1/c) * sum (-u)^k, summed until the powers die out.
  GradedPolynomial u = p * Rational(1 / c);
  u.add_term(Monomial::one(ctx), -1);
  GradedPolynomial acc = GradedPolynomial::constant(ctx, 1);
  GradedPolynomial power = GradedPolynomial::constant(ctx, 1);
  int budget = ctx.jet_order() + 2 * ctx.filtration_order() + 8;
  for (int k = 0; k < budget && !power.is_zero(); ++k) {
    power = power * u;
    power *= Rational(-1);
    acc += power;
  }
  if (!power.is_zero())
    throw MathError("geometric series fails to terminate at truncation; polynomial not invertible");
  acc *= Rational(1 / c);
  return acc;
}

}  // namespace gradedq
