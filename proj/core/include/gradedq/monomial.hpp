// Monomials over a graded context, stored canonically as exponent vectors in
// declaration order. The Koszul sign rule lives here: odd-degree variables
// anticommute, so normalizing a factor sequence into declaration order
// accumulates a sign (and an odd repeated factor kills the monomial).
//
// Four gradings are tracked for every monomial:
//   total    - sum of exponent * degree (sign authority: parity of this
//              number drives every Koszul sign);
//   positive - contribution of positive-degree factors;
//   negative - contribution of negative-degree factors, counted positively,
//              so total = positive - negative;
//   arity    - number of nonzero-degree factors with multiplicity.
// The base (jet) degree -- total exponent of degree-0 factors -- controls jet
// truncation; the negative degree controls filtration truncation.

#ifndef GRADEDQ_MONOMIAL_HPP
#define GRADEDQ_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gradedq/context.hpp"

namespace gradedq {

struct Monomial {
  std::vector<uint32_t> exponents;

  static Monomial one(const Context& ctx) {
    return Monomial{std::vector<uint32_t>(static_cast<size_t>(ctx.size()), 0)};
  }
  static Monomial variable(const Context& ctx, int i) {
    Monomial m = one(ctx);
    m.exponents[static_cast<size_t>(i)] = 1;
    return m;
  }

  uint32_t exponent(int i) const { return exponents[static_cast<size_t>(i)]; }
  bool is_one() const;

  auto operator<=>(const Monomial&) const = default;
};

int total_degree(const Context& ctx, const Monomial& m);
int positive_degree(const Context& ctx, const Monomial& m);
int negative_degree(const Context& ctx, const Monomial& m);
int arity(const Context& ctx, const Monomial& m);
int base_degree(const Context& ctx, const Monomial& m);
// Number of negative-degree factors with multiplicity.
int negative_arity(const Context& ctx, const Monomial& m);
bool is_odd(const Context& ctx, const Monomial& m);

// True when the monomial survives truncation: base degree <= jet_order and
// negative degree < filtration_order.
bool within_truncation(const Context& ctx, const Monomial& m);

// Normalizes a factor sequence (variable indices, arbitrary order, repeats
// allowed) into declaration order. Returns the sign (+1/-1), or 0 when an
// odd variable repeats. `out` receives the exponent vector.
int canonicalize(const Context& ctx, const std::vector<int>& factors, Monomial& out);

// Koszul sign of the product of two canonical monomials (+1/-1), or 0 when
// they share an odd variable.
int product_sign(const Context& ctx, const Monomial& a, const Monomial& b);

// Sign picked up by the left partial derivative along variable i, i.e. the
// parity of the total degree of the factors preceding i in canonical order
// times the degree of i. Meaningful only when exponent(i) > 0.
int derivative_sign(const Context& ctx, const Monomial& m, int i);

std::string to_string(const Context& ctx, const Monomial& m);

}  // namespace gradedq

#endif
