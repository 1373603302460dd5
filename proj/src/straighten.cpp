#include "coinv/straighten.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace coinv::superring {

namespace {

// Combined set positions: bosonic sets 0..k-1, then fermionic sets
// k..k+j-1. The straightening order "least admissible set" refers to
// this order.
bool is_ferm_pos(const RingContext& ctx, int pos) { return pos >= ctx.k(); }

SuperMonomial index_monomial(const RingContext& ctx, int pos, int idx) {
    if (is_ferm_pos(ctx, pos))
        return fermionic_monomial(ctx, ctx.fermionic_index(pos - ctx.k(), idx));
    return bosonic_monomial(ctx, ctx.bosonic_index(pos, idx));
}

int index_multiplicity(const RingContext& ctx, const SuperMonomial& m, int pos,
                       int idx) {
    if (is_ferm_pos(ctx, pos))
        return static_cast<int>(m.ferm >> ctx.fermionic_index(pos - ctx.k(), idx) & 1);
    return m.bos[static_cast<std::size_t>(ctx.bosonic_index(pos, idx))];
}

int first_index_degree(const RingContext& ctx, const SuperMonomial& m) {
    int d = 0;
    for (int p = 0; p < ctx.num_sets(); ++p)
        d += index_multiplicity(ctx, m, p, 0);
    return d;
}

RationalPoly unit_poly(const ContextPtr& ctx, const SuperMonomial& m) {
    return RationalPoly::monomial(ctx, m, Rational(1));
}

// One rewriting step: r is an explicit element of the ideal containing
// cur in its support; cur is congruent to cur - r / coeff, which by
// construction of r collapses to at most one monomial.
std::optional<std::pair<Rational, SuperMonomial>> rewrite_by(
    const ContextPtr& ctx, const SuperMonomial& cur, const RationalPoly& r) {
    const Rational* c = r.find(cur);
    if (!c || *c == 0)
        throw std::logic_error("rewrite relation does not touch the monomial");
    RationalPoly rem = unit_poly(ctx, cur) - r.scaled(Rational(1) / *c);
    if (rem.is_zero()) return std::nullopt;
    if (rem.term_count() != 1)
        throw std::logic_error("rewrite step did not produce a single monomial");
    const auto& [m2, c2] = *rem.terms().begin();
    return std::make_pair(c2, m2);
}

}  // namespace

RationalPoly quadratic_generator(const ContextPtr& ctx, int pos_a, int pos_b) {
    int a = pos_a, b = pos_b;
    if (a > b) std::swap(a, b);
    if (is_ferm_pos(*ctx, a) && a == b)
        throw std::invalid_argument("no quadratic relation on one fermionic set");
    RationalPoly first =
        mul(unit_poly(ctx, index_monomial(*ctx, a, 0)),
            unit_poly(ctx, index_monomial(*ctx, b, 0)));
    RationalPoly second =
        mul(unit_poly(ctx, index_monomial(*ctx, a, 1)),
            unit_poly(ctx, index_monomial(*ctx, b, 1)));
    return first + second;
}

std::vector<RationalPoly> ideal_generators(const ContextPtr& ctx) {
    if (ctx->is_cyclic())
        throw std::invalid_argument("generator families are dihedral-only");
    const int k = ctx->k(), j = ctx->j(), n = ctx->n();
    std::vector<RationalPoly> out;
    for (int h = 0; h < k; ++h)
        for (int i = h; i < k; ++i) out.push_back(quadratic_generator(ctx, h, i));
    for (int h = 0; h < k; ++h)
        for (int i = 0; i < j; ++i)
            out.push_back(quadratic_generator(ctx, h, k + i));
    for (int h = 0; h < j; ++h)
        for (int i = h + 1; i < j; ++i)
            out.push_back(quadratic_generator(ctx, k + h, k + i));
    // First-index monomials of total degree exactly n.
    std::vector<SuperMonomial> degree_n;
    std::function<void(int, int, SuperMonomial&)> rec =
        [&](int pos, int remaining, SuperMonomial& m) {
            if (pos == ctx->num_sets()) {
                if (remaining == 0) degree_n.push_back(m);
                return;
            }
            int cap = is_ferm_pos(*ctx, pos) ? std::min(remaining, 1) : remaining;
            for (int e = 0; e <= cap; ++e) {
                SuperMonomial t = m;
                if (e > 0) {
                    if (is_ferm_pos(*ctx, pos))
                        t.ferm |= std::uint64_t(1)
                                  << ctx->fermionic_index(pos - ctx->k(), 0);
                    else
                        t.bos[static_cast<std::size_t>(
                            ctx->bosonic_index(pos, 0))] = e;
                }
                rec(pos + 1, remaining - e, t);
            }
        };
    SuperMonomial seed = constant_monomial(*ctx);
    rec(0, n, seed);
    for (SuperMonomial& m : degree_n)
        out.push_back(unit_poly(ctx, m));
    return out;
}

namespace {

// All monomials in first-index variables only, with bosonic sets
// restricted to >= bos_min (bos_min = k disables bosonic entirely),
// fermionic sets restricted to >= ferm_min, of total degree <= cap.
std::vector<SuperMonomial> first_index_monomials(const RingContext& ctx,
                                                 int bos_min, int ferm_min,
                                                 int cap) {
    std::vector<SuperMonomial> out;
    SuperMonomial cur = constant_monomial(ctx);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == ctx.num_sets()) {
            out.push_back(cur);
            return;
        }
        bool ferm = is_ferm_pos(ctx, pos);
        bool allowed = ferm ? (pos - ctx.k()) >= ferm_min : pos >= bos_min;
        self(self, pos + 1, remaining);
        if (!allowed) return;
        int cap_here = ferm ? std::min(remaining, 1) : remaining;
        for (int e = 1; e <= cap_here; ++e) {
            SuperMonomial saved = cur;
            if (ferm)
                cur.ferm |= std::uint64_t(1)
                            << ctx.fermionic_index(pos - ctx.k(), 0);
            else
                cur.bos[static_cast<std::size_t>(ctx.bosonic_index(pos, 0))] = e;
            self(self, pos + 1, remaining - e);
            cur = saved;
        }
    };
    rec(rec, 0, cap);
    return out;
}

}  // namespace

std::vector<SuperMonomial> basis_enumerate(const ContextPtr& ctx) {
    if (ctx->is_cyclic())
        throw std::invalid_argument("use cyclic_basis_enumerate");
    const int k = ctx->k(), j = ctx->j(), n = ctx->n();
    std::set<SuperMonomial> basis;

    for (SuperMonomial& m : first_index_monomials(*ctx, 0, 0, n - 1))
        basis.insert(std::move(m));

    for (int s = 0; s < k; ++s) {
        SuperMonomial x2 = index_monomial(*ctx, s, 1);
        for (const SuperMonomial& m : first_index_monomials(*ctx, s, 0, n - 1))
            basis.insert(monomial_product(m, x2)->second);
    }
    for (int s = 0; s < j; ++s) {
        SuperMonomial t2 = index_monomial(*ctx, k + s, 1);
        for (const SuperMonomial& m :
             first_index_monomials(*ctx, k, s + 1, n - 1))
            basis.insert(monomial_product(m, t2)->second);
    }
    for (int h = 0; h < k; ++h)
        for (int i = h + 1; i < k; ++i)
            basis.insert(
                monomial_product(index_monomial(*ctx, h, 0),
                                 index_monomial(*ctx, i, 1))
                    ->second);
    for (int h = 0; h < k; ++h)
        for (int i = 0; i < j; ++i)
            basis.insert(
                monomial_product(index_monomial(*ctx, h, 0),
                                 index_monomial(*ctx, k + i, 1))
                    ->second);
    for (int h = 0; h < j; ++h)
        for (int i = h; i < j; ++i)
            basis.insert(
                monomial_product(index_monomial(*ctx, k + h, 0),
                                 index_monomial(*ctx, k + i, 1))
                    ->second);

    std::vector<SuperMonomial> out(basis.begin(), basis.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const SuperMonomial& a, const SuperMonomial& b) {
                         return a.total_degree() < b.total_degree();
                     });
    return out;
}

std::vector<SuperMonomial> cyclic_basis_enumerate(const ContextPtr& ctx) {
    if (!ctx->is_cyclic())
        throw std::invalid_argument("context is not cyclic");
    std::vector<SuperMonomial> out;
    for (int t = 0; t <= ctx->n() - 1; ++t)
        for (const Multidegree& d : multidegrees_of_total(*ctx, t))
            for (SuperMonomial& m : monomials_of_multidegree(*ctx, d))
                out.push_back(std::move(m));
    return out;
}

ReduceResult cyclic_reduce(const ContextPtr& ctx, const SuperMonomial& m) {
    if (!ctx->is_cyclic())
        throw std::invalid_argument("context is not cyclic");
    // Every monomial of degree >= n contains a degree-n monomial of
    // the ideal; everything below survives untouched.
    if (m.total_degree() >= ctx->n()) return {};
    return {1, m};
}

ReduceResult reduce(const ContextPtr& ctx, const SuperMonomial& m) {
    if (ctx->is_cyclic())
        throw std::invalid_argument("use cyclic_reduce");
    const int k = ctx->k(), n = ctx->n();
    const int num_sets = ctx->num_sets();

    Rational coef(1);
    SuperMonomial cur = m;

    for (;;) {
        // A same-set fermionic pair t1_s t2_s in company is in the
        // ideal: multiplying the matching quadratic relation by any
        // companion factor leaves the monomial as the only surviving
        // term. Bare t1_s t2_s is a basis element.
        bool bare_pair = false;
        for (int s = k; s < num_sets; ++s) {
            if (index_multiplicity(*ctx, cur, s, 0) == 0 ||
                index_multiplicity(*ctx, cur, s, 1) == 0)
                continue;
            if (cur.total_degree() > 2) return {};
            bare_pair = true;
            break;
        }
        if (bare_pair) break;

        // Pairs of second-index variables annihilate into first-index
        // pairs with a sign.
        std::vector<int> second_slots;
        for (int p = 0; p < num_sets && second_slots.size() < 2; ++p) {
            int mult = index_multiplicity(*ctx, cur, p, 1);
            for (int t = 0; t < mult && second_slots.size() < 2; ++t)
                second_slots.push_back(p);
        }
        if (second_slots.size() == 2) {
            int p = second_slots[0], q = second_slots[1];
            auto pair_mono = monomial_product(index_monomial(*ctx, p, 1),
                                              index_monomial(*ctx, q, 1));
            auto u = monomial_quotient(cur, pair_mono->second);
            RationalPoly r =
                mul(unit_poly(ctx, *u), quadratic_generator(ctx, p, q));
            auto step = rewrite_by(ctx, cur, r);
            if (!step) return {};
            coef *= step->first;
            cur = step->second;
            continue;
        }

        // First-index total degree n means the monomial contains a
        // degree-n relation outright.
        if (first_index_degree(*ctx, cur) >= n) return {};

        if (second_slots.size() == 1) {
            const int i = second_slots[0];
            int h = -1;
            for (int p = 0; p < i; ++p)
                if (index_multiplicity(*ctx, cur, p, 0) > 0) {
                    h = p;
                    break;
                }
            if (h < 0 || first_index_degree(*ctx, cur) < 2)
                break;  // sporadic or already admissible

            // Catalyst: any first-index factor left after reserving
            // one copy at h.
            int cat = -1;
            for (int p = 0; p < num_sets; ++p) {
                int avail =
                    index_multiplicity(*ctx, cur, p, 0) - (p == h ? 1 : 0);
                if (avail > 0) {
                    cat = p;
                    break;
                }
            }
            SuperMonomial used = index_monomial(*ctx, h, 0);
            used = monomial_product(used, index_monomial(*ctx, cat, 0))->second;
            used = monomial_product(used, index_monomial(*ctx, i, 1))->second;
            auto w = monomial_quotient(cur, used);

            // The three-term relation v1_cat (v2_h v1_i - v1_h v2_i) is
            // a combination of two quadratic generators; build both
            // products and cancel their shared all-second-index term.
            RationalPoly wp = unit_poly(ctx, *w);
            RationalPoly p_side =
                mul(mul(wp, unit_poly(ctx, index_monomial(*ctx, h, 1))),
                    quadratic_generator(ctx, cat, i));
            RationalPoly q_side =
                mul(mul(wp, quadratic_generator(ctx, cat, h)),
                    unit_poly(ctx, index_monomial(*ctx, i, 1)));
            const SuperMonomial* shared = nullptr;
            for (const auto& [mono, c] : p_side.terms())
                if (q_side.find(mono)) {
                    if (shared)
                        throw std::logic_error("ambiguous migration relation");
                    shared = &mono;
                }
            if (!shared)
                throw std::logic_error("migration relation lost its pivot");
            Rational scale = -(*p_side.find(*shared)) / *q_side.find(*shared);
            RationalPoly r = p_side + q_side.scaled(scale);
            auto step = rewrite_by(ctx, cur, r);
            if (!step) return {};
            coef *= step->first;
            cur = step->second;
            continue;
        }
        break;
    }

    if (coef != 1 && coef != -1)
        throw std::logic_error("reduction sign left the unit group");
    return {coef == 1 ? 1 : -1, cur};
}

}  // namespace coinv::superring
