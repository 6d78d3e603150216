#include "gradedq/monomial.hpp"

#include <algorithm>

#include "gradedq/errors.hpp"

namespace gradedq {

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](uint32_t e) { return e == 0; });
}

int total_degree(const Context& ctx, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < ctx.size(); ++i) d += static_cast<int>(m.exponent(i)) * ctx.degree(i);
  return d;
}

int positive_degree(const Context& ctx, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < ctx.size(); ++i) d += static_cast<int>(m.exponent(i)) * ctx.pos_degree(i);
  return d;
}

int negative_degree(const Context& ctx, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < ctx.size(); ++i) d += static_cast<int>(m.exponent(i)) * ctx.neg_degree(i);
  return d;
}

int arity(const Context& ctx, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < ctx.size(); ++i)
    if (!ctx.is_base(i)) d += static_cast<int>(m.exponent(i));
  return d;
}

int base_degree(const Context& ctx, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < ctx.size(); ++i)
    if (ctx.is_base(i)) d += static_cast<int>(m.exponent(i));
  return d;
}

int negative_arity(const Context& ctx, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < ctx.size(); ++i)
    if (ctx.degree(i) < 0) d += static_cast<int>(m.exponent(i));
  return d;
}

bool is_odd(const Context& ctx, const Monomial& m) {
  return total_degree(ctx, m) % 2 != 0;
}

bool within_truncation(const Context& ctx, const Monomial& m) {
  return base_degree(ctx, m) <= ctx.jet_order() &&
         negative_degree(ctx, m) < ctx.filtration_order();
}

int canonicalize(const Context& ctx, const std::vector<int>& factors, Monomial& out) {
  out = Monomial::one(ctx);
  // Sort by insertion, counting transpositions of odd-odd adjacent swaps.
  // Sequences here are tiny (a handful of factors), so quadratic is fine.
  std::vector<int> seq = factors;
  int sign = 1;
  for (size_t i = 1; i < seq.size(); ++i) {
    for (size_t j = i; j > 0 && seq[j] < seq[j - 1]; --j) {
      if (ctx.is_odd(seq[j]) && ctx.is_odd(seq[j - 1])) sign = -sign;
      std::swap(seq[j], seq[j - 1]);
    }
  }
  for (size_t i = 0; i < seq.size(); ++i) {
    int v = seq[i];
    if (v < 0 || v >= ctx.size()) throw UsageError("variable index out of range");
    if (i + 1 < seq.size() && seq[i + 1] == v && ctx.is_odd(v)) return 0;  // odd square
    ++out.exponents[static_cast<size_t>(v)];
  }
  return sign;
}

int product_sign(const Context& ctx, const Monomial& a, const Monomial& b) {
  // Each odd factor of b moves left past every odd factor of a with a larger
  // variable index; shared odd factors square to zero.
  int sign = 1;
  int odd_tail = 0;  // odd factors of a with index > current b-position
  for (int i = ctx.size() - 1; i >= 0; --i) {
    if (!ctx.is_odd(i)) continue;
    if (a.exponent(i) && b.exponent(i)) return 0;
    if (b.exponent(i) && (odd_tail % 2)) sign = -sign;
    if (a.exponent(i)) ++odd_tail;
  }
  return sign;
}

int derivative_sign(const Context& ctx, const Monomial& m, int i) {
  if (ctx.degree(i) % 2 == 0) return 1;
  int prefix = 0;
  for (int j = 0; j < i; ++j) prefix += static_cast<int>(m.exponent(j)) * ctx.degree(j);
  return prefix % 2 ? -1 : 1;
}

std::string to_string(const Context& ctx, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ctx.size(); ++i) {
    uint32_t e = m.exponent(i);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += ctx.var(i).name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

}  // namespace gradedq
