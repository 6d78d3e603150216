#include "gradedq/basis.hpp"

#include <algorithm>
#include <cassert>

namespace gradedq {

namespace {

struct Key {
  int neg, base, ar;
  const std::vector<uint32_t>* exps;
};

Key key_of(const Context& ctx, const Monomial& m) {
  return Key{negative_degree(ctx, m), base_degree(ctx, m), arity(ctx, m), &m.exponents};
}

bool key_before(const Key& a, const Key& b) {
  if (a.neg != b.neg) return a.neg < b.neg;
  if (a.base != b.base) return a.base < b.base;
  if (a.ar != b.ar) return a.ar < b.ar;
  return *a.exps < *b.exps;
}

// Depth-first enumeration over declaration order with per-variable caps. The
// caps are sound: positive, negative and base degrees are all nondecreasing
// while exponents are added, and a surviving monomial of total degree t needs
// pos = t + neg <= t + (filtration - 1).
void enumerate(const Context& ctx, int target, size_t i, Monomial& cur, int tot, int pos, int neg,
               int base, std::vector<Monomial>& out) {
  const int filt = ctx.filtration_order();
  if (neg >= filt || base > ctx.jet_order()) return;
  if (pos > target + filt - 1) return;
  if (i == ctx.size()) {
    if (tot == target) out.push_back(cur);
    return;
  }
  const int d = ctx.degree(static_cast<int>(i));
  int cap;
  if (d == 0) {
    cap = ctx.jet_order() - base;
  } else if (ctx.is_odd(static_cast<int>(i))) {
    cap = 1;
  } else if (d < 0) {
    cap = (filt - 1 - neg) / (-d);
  } else {
    cap = std::max(0, (target + filt - 1 - pos) / d);
  }
  for (int e = 0; e <= cap; ++e) {
    cur.exponents[i] = static_cast<uint32_t>(e);
    enumerate(ctx, target, i + 1, cur, tot + e * d, pos + e * std::max(d, 0),
              neg + e * std::max(-d, 0), base + (d == 0 ? e : 0), out);
  }
  cur.exponents[i] = 0;
}

void enumerate_all(const Context& ctx, int positive_cap, size_t i, Monomial& cur, int neg,
                   int base, std::vector<Monomial>& out) {
  const int filt = ctx.filtration_order();
  if (neg >= filt || base > ctx.jet_order()) return;
  if (i == ctx.size()) {
    out.push_back(cur);
    return;
  }
  const int d = ctx.degree(static_cast<int>(i));
  int cap;
  if (d == 0) {
    cap = ctx.jet_order() - base;
  } else if (ctx.is_odd(static_cast<int>(i))) {
    cap = 1;
  } else if (d < 0) {
    cap = (filt - 1 - neg) / (-d);
  } else {
    cap = positive_cap;
  }
  for (int e = 0; e <= cap; ++e) {
    cur.exponents[i] = static_cast<uint32_t>(e);
    enumerate_all(ctx, positive_cap, i + 1, cur, neg + e * std::max(-d, 0),
                  base + (d == 0 ? e : 0), out);
  }
  cur.exponents[i] = 0;
}

}  // namespace

bool monomial_before(const Context& ctx, const Monomial& a, const Monomial& b) {
  return key_before(key_of(ctx, a), key_of(ctx, b));
}

std::vector<Monomial> monomial_basis(const Context& ctx, int total_degree) {
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(ctx);
  enumerate(ctx, total_degree, 0, cur, 0, 0, 0, 0, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return monomial_before(ctx, a, b); });
  return out;
}

std::vector<Monomial> base_monomials(const Context& ctx) {
  std::vector<Monomial> out;
  for (const Monomial& m : monomial_basis(ctx, 0)) {
    if (arity(ctx, m) == 0) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> truncated_monomials(const Context& ctx, int positive_cap) {
  assert(positive_cap >= 0);
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(ctx);
  enumerate_all(ctx, positive_cap, 0, cur, 0, 0, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return monomial_before(ctx, a, b); });
  return out;
}

std::vector<DerivationTerm> derivation_term_basis(const Context& ctx, int total_degree) {
  std::vector<DerivationTerm> out;
  for (int v = 0; v < static_cast<int>(ctx.size()); ++v) {
    for (const Monomial& m : monomial_basis(ctx, total_degree + ctx.degree(v))) {
      out.push_back(DerivationTerm{v, m});
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const DerivationTerm& a, const DerivationTerm& b) {
    if (monomial_before(ctx, a.mono, b.mono)) return true;
    if (monomial_before(ctx, b.mono, a.mono)) return false;
    return a.var < b.var;
  });
  return out;
}

std::map<Monomial, int> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, int> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  return idx;
}

QVector coordinates(const GradedPolynomial& p, const std::map<Monomial, int>& index, int dim) {
  QVector v(dim, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    assert(it != index.end() && "monomial outside the enumerated basis");
    v[it->second] = c;
  }
  return v;
}

GradedPolynomial from_coordinates(const Context& ctx, const std::vector<Monomial>& basis,
                                  const QVector& v) {
  assert(basis.size() == v.size());
  GradedPolynomial p = GradedPolynomial::zero(ctx);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (v[i] != 0) p.add_term(basis[i], v[i]);
  }
  return p;
}

}  // namespace gradedq
