#pragma once

#include <vector>

#include "coinv/superring.hpp"

namespace coinv::superring {

/// Generating elements of the invariant ideal used as straightening
/// relations: the three quadratic families
///   x1_h x1_i + x2_h x2_i   (h <= i, bosonic),
///   x1_h t1_i + x2_h t2_i   (h bosonic, i fermionic),
///   t1_h t1_i + t2_h t2_i   (h < i, fermionic),
/// plus every first-index monomial of total degree n.
std::vector<RationalPoly> ideal_generators(const ContextPtr& ctx);

/// The quadratic relation pairing positions a and b of the combined
/// set order (bosonic sets first). Order-insensitive; throws for a
/// repeated fermionic position.
RationalPoly quadratic_generator(const ContextPtr& ctx, int pos_a, int pos_b);

/// The monomial basis of the dihedral coinvariant ring: pure
/// first-index monomials of degree < n, the single-x2 and single-t2
/// families, and the three sporadic quadratic families. Sorted by
/// total degree, then lexicographically; no duplicates.
std::vector<SuperMonomial> basis_enumerate(const ContextPtr& ctx);

/// Monomials of total degree <= n-1 in the one-variable-per-set cyclic
/// ring.
std::vector<SuperMonomial> cyclic_basis_enumerate(const ContextPtr& ctx);

struct ReduceResult {
    int sign = 0;       // -1, 0, +1
    SuperMonomial rep;  // valid basis monomial when sign != 0

    bool is_zero() const { return sign == 0; }
};

/// Straightening normal form: rewrites m to sign * basis monomial (or
/// zero) such that m - sign * rep lies in the invariant ideal. The
/// strategy is fixed: kill same-set fermionic pairs with company,
/// eliminate second-index pairs, kill first-index degree >= n, then
/// migrate the lone second-index variable to the least admissible set.
/// Every step subtracts an explicit multiple of an ideal generator, so
/// membership of the difference in the ideal holds by construction.
ReduceResult reduce(const ContextPtr& ctx, const SuperMonomial& m);

/// reduce for the cyclic ring: identity below degree n, zero from
/// degree n on.
ReduceResult cyclic_reduce(const ContextPtr& ctx, const SuperMonomial& m);

/// Linear extension of reduce; idempotent, kills every ideal generator.
template <class C>
SuperPoly<C> reduce_poly(const SuperPoly<C>& p) {
    SuperPoly<C> out(p.context());
    const bool cyclic = p.context()->is_cyclic();
    for (const auto& [m, c] : p.terms()) {
        ReduceResult r =
            cyclic ? cyclic_reduce(p.context(), m) : reduce(p.context(), m);
        if (r.sign == 0) continue;
        C scaled = c;
        if (r.sign < 0) scaled = scaled * Rational(-1);
        out.add_term(std::move(r.rep), std::move(scaled));
    }
    return out;
}

}  // namespace coinv::superring
