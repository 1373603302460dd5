#include "coinv/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "coinv/series.hpp"

namespace coinv::oracle {

using chartab::CyclotomicField;
using superring::monomial_product;
using superring::monomial_to_string;
using superring::monomials_of_multidegree;
using superring::multidegree;
using superring::multidegrees_of_total;
using superring::RingContext;

std::string multidegree_to_string(const Multidegree& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

namespace {

int total_of(const Multidegree& d) {
    return std::accumulate(d.begin(), d.end(), 0);
}

CyclotomicPoly unit_cyclotomic(const ContextPtr& ctx,
                               const chartab::FieldPtr& field,
                               const SuperMonomial& m) {
    return CyclotomicPoly::monomial(ctx, m, field->one());
}

RationalPoly unit_rational(const ContextPtr& ctx, const SuperMonomial& m) {
    return RationalPoly::monomial(ctx, m, Rational(1));
}

CyclotomicPoly pow_poly(const CyclotomicPoly& base, int e,
                        const ContextPtr& ctx, const chartab::FieldPtr& field) {
    CyclotomicPoly acc =
        unit_cyclotomic(ctx, field, superring::constant_monomial(*ctx));
    for (int i = 0; i < e; ++i) acc = mul(acc, base);
    return acc;
}

}  // namespace

GroupAction::GroupAction(ContextPtr ctx, chartab::FieldPtr field)
    : ctx_(std::move(ctx)), field_(std::move(field)) {}

GroupAction GroupAction::dihedral(int n, int k, int j) {
    return GroupAction(RingContext::dihedral(n, k, j),
                       CyclotomicField::get(std::lcm(4, n)));
}

GroupAction GroupAction::cyclic(int n, int k, int j) {
    return GroupAction(RingContext::cyclic(n, k, j), CyclotomicField::get(n));
}

std::vector<GroupElement> GroupAction::elements() const {
    if (!is_cyclic()) return chartab::all_elements(n());
    std::vector<GroupElement> out;
    for (int e = 0; e < n(); ++e) out.push_back({false, e});
    return out;
}

GroupAction::Images GroupAction::images_for(const GroupElement& g) const {
    Images im;
    const int nb = ctx_->num_bosonic(), nf = ctx_->num_fermionic();
    im.bosonic.resize(static_cast<std::size_t>(nb));
    im.fermionic.resize(static_cast<std::size_t>(nf));
    if (is_cyclic()) {
        if (g.reflection)
            throw std::invalid_argument("cyclic group has no reflections");
        Cyclotomic z = field_->root_power(g.exponent);
        for (int i = 0; i < nb; ++i)
            im.bosonic[static_cast<std::size_t>(i)] = CyclotomicPoly::monomial(
                ctx_, superring::bosonic_monomial(*ctx_, i), z);
        for (int i = 0; i < nf; ++i)
            im.fermionic[static_cast<std::size_t>(i)] = CyclotomicPoly::monomial(
                ctx_, superring::fermionic_monomial(*ctx_, i), z);
        return im;
    }
    // Rotation by 2 pi e / n followed (optionally) by the reflection
    // diag(1, -1); the images below are the columns of the product
    // matrix. zeta_n = zeta_N^(N/n) and i = zeta_N^(N/4).
    const int N = field_->order();
    const long a = static_cast<long>(g.exponent) * (N / n());
    Cyclotomic half = field_->rational(Rational(1, 2));
    Cyclotomic cos_e = (field_->root_power(a) + field_->root_power(-a)) * half;
    Cyclotomic sin_e = (field_->root_power(-a) - field_->root_power(a)) *
                       field_->root_power(N / 4) * half;
    // g.x1 = cos x1 + sin x2; g.x2 = -sin x1 + cos x2 for rotations,
    //   and sin x1 - cos x2 when g also reflects.
    auto fill = [&](std::vector<CyclotomicPoly>& dst, bool fermionic) {
        const int sets = fermionic ? ctx_->j() : ctx_->k();
        for (int s = 0; s < sets; ++s) {
            auto gen_mono = [&](int idx) {
                return fermionic
                           ? superring::fermionic_monomial(
                                 *ctx_, ctx_->fermionic_index(s, idx))
                           : superring::bosonic_monomial(
                                 *ctx_, ctx_->bosonic_index(s, idx));
            };
            CyclotomicPoly v1 = CyclotomicPoly::monomial(ctx_, gen_mono(0), cos_e);
            v1.add_term(gen_mono(1), sin_e);
            CyclotomicPoly v2(ctx_);
            if (g.reflection) {
                v2.add_term(gen_mono(0), sin_e);
                v2.add_term(gen_mono(1), -cos_e);
            } else {
                v2.add_term(gen_mono(0), -sin_e);
                v2.add_term(gen_mono(1), cos_e);
            }
            dst[static_cast<std::size_t>(
                fermionic ? ctx_->fermionic_index(s, 0) : ctx_->bosonic_index(s, 0))] = v1;
            dst[static_cast<std::size_t>(
                fermionic ? ctx_->fermionic_index(s, 1) : ctx_->bosonic_index(s, 1))] = v2;
        }
    };
    fill(im.bosonic, false);
    fill(im.fermionic, true);
    return im;
}

CyclotomicPoly GroupAction::act_monomial(const GroupElement& g,
                                         const SuperMonomial& m) const {
    Images im = images_for(g);
    CyclotomicPoly out =
        unit_cyclotomic(ctx_, field_, superring::constant_monomial(*ctx_));
    for (int b = 0; b < ctx_->num_bosonic(); ++b) {
        int e = m.bos[static_cast<std::size_t>(b)];
        if (e > 0)
            out = mul(out, pow_poly(im.bosonic[static_cast<std::size_t>(b)], e,
                                    ctx_, field_));
    }
    // Fermionic images multiply in the canonical (ascending) factor
    // order of the source monomial.
    for (int f = 0; f < ctx_->num_fermionic(); ++f)
        if (m.ferm >> f & 1)
            out = mul(out, im.fermionic[static_cast<std::size_t>(f)]);
    return out;
}

CyclotomicPoly GroupAction::act(const GroupElement& g,
                                const CyclotomicPoly& p) const {
    CyclotomicPoly out(ctx_);
    for (const auto& [m, c] : p.terms())
        out += act_monomial(g, m).scaled_by(c);
    return out;
}

CyclotomicPoly GroupAction::reynolds(const CyclotomicPoly& p) const {
    CyclotomicPoly out(ctx_);
    for (const GroupElement& g : elements()) out += act(g, p);
    return out.scaled(Rational(1, group_size()));
}

CyclotomicPoly GroupAction::lift(const RationalPoly& p) const {
    CyclotomicPoly out(ctx_);
    for (const auto& [m, c] : p.terms()) out.add_term(m, field_->rational(c));
    return out;
}

RationalPoly GroupAction::to_rational(const CyclotomicPoly& p) const {
    RationalPoly out(ctx_);
    for (const auto& [m, c] : p.terms()) out.add_term(m, c.rational_value());
    return out;
}

// ---------------------------------------------------------------------------
// Diagonal-coordinate quotient dimensions.
//
// Per variable set read the two slots as z = x1 + i x2 and w = x1 - i x2
// (likewise for the fermionic pair). Rotations scale a monomial by
// zeta_n^(sum of w-degrees - sum of z-degrees) and the reflection phi
// swaps the two slots of every set, with the usual sign from reordering
// fermionic factors.

namespace {

int diagonal_weight(const RingContext& ctx, const SuperMonomial& m) {
    int wt = 0;
    for (int s = 0; s < ctx.k(); ++s)
        wt += m.bos[static_cast<std::size_t>(ctx.bosonic_index(s, 1))] -
              m.bos[static_cast<std::size_t>(ctx.bosonic_index(s, 0))];
    for (int s = 0; s < ctx.j(); ++s)
        wt += static_cast<int>(m.ferm >> ctx.fermionic_index(s, 1) & 1) -
              static_cast<int>(m.ferm >> ctx.fermionic_index(s, 0) & 1);
    return wt;
}

std::pair<int, SuperMonomial> diagonal_swap(const RingContext& ctx,
                                            const SuperMonomial& m) {
    SuperMonomial out = m;
    for (int s = 0; s < ctx.k(); ++s)
        std::swap(out.bos[static_cast<std::size_t>(ctx.bosonic_index(s, 0))],
                  out.bos[static_cast<std::size_t>(ctx.bosonic_index(s, 1))]);
    // Fermionic: generator p maps to p XOR 1 (its set partner). The
    // sign is the parity of sorting the image sequence.
    std::vector<int> image;
    for (int f = 0; f < ctx.num_fermionic(); ++f)
        if (m.ferm >> f & 1) image.push_back(f ^ 1);
    int inversions = 0;
    for (std::size_t a = 0; a < image.size(); ++a)
        for (std::size_t b = a + 1; b < image.size(); ++b)
            if (image[a] > image[b]) ++inversions;
    std::uint64_t mask = 0;
    for (int f : image) mask |= std::uint64_t(1) << f;
    out.ferm = mask;
    return {inversions % 2 == 0 ? 1 : -1, out};
}

// Unscaled Reynolds image in diagonal coordinates: zero unless the
// rotation weight vanishes mod n; then m (+/-) swapped(m). In cyclic
// mode every variable is already a zeta-eigenvector of weight one and
// there is no reflection.
RationalPoly diagonal_reynolds(const ContextPtr& ctx, const SuperMonomial& m) {
    RationalPoly out(ctx);
    const int weight =
        ctx->is_cyclic() ? m.total_degree() : diagonal_weight(*ctx, m);
    if (weight % ctx->n() != 0) return out;
    out.add_term(m, Rational(1));
    if (!ctx->is_cyclic()) {
        auto [sign, swapped] = diagonal_swap(*ctx, m);
        out.add_term(swapped, Rational(sign));
    }
    return out;
}

std::vector<Rational> vectorize_poly(const std::vector<SuperMonomial>& monos,
                                     const RationalPoly& p) {
    std::vector<Rational> row(monos.size(), Rational(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (const Rational* c = p.find(monos[i])) {
            row[i] = *c;
            ++found;
        }
    }
    if (found != p.term_count())
        throw std::logic_error("polynomial leaves the multidegree component");
    return row;
}

std::vector<Multidegree> sub_multidegrees(const Multidegree& d) {
    std::vector<Multidegree> out;
    Multidegree cur(d.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == d.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= d[i]; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    return out;
}

GradedDims diagonal_quotient_dims(const ContextPtr& ctx, int degree_cap) {
    const int n = ctx->n();
    if (degree_cap < n + 1)
        throw std::invalid_argument("degree cap must be at least n + 1");

    std::map<Multidegree, std::vector<SuperMonomial>> monos;
    auto monomials = [&](const Multidegree& d) -> const std::vector<SuperMonomial>& {
        auto it = monos.find(d);
        if (it == monos.end())
            it = monos.emplace(d, monomials_of_multidegree(*ctx, d)).first;
        return it->second;
    };

    // Row basis of the invariants of each multidegree.
    std::map<Multidegree, std::vector<RationalPoly>> invariants;
    auto invariant_basis =
        [&](const Multidegree& d) -> const std::vector<RationalPoly>& {
        auto it = invariants.find(d);
        if (it != invariants.end()) return it->second;
        std::vector<RationalPoly> basis;
        const auto& ms = monomials(d);
        FractionFreeEchelon ech(ms.size());
        for (const SuperMonomial& m : ms) {
            RationalPoly r = diagonal_reynolds(ctx, m);
            if (r.is_zero()) continue;
            if (ech.insert(vectorize_poly(ms, r))) basis.push_back(std::move(r));
        }
        return invariants.emplace(d, std::move(basis)).first->second;
    };

    GradedDims dims;
    for (int t = 0; t <= degree_cap; ++t) {
        for (const Multidegree& d : multidegrees_of_total(*ctx, t)) {
            const auto& ms = monomials(d);
            if (ms.empty()) continue;
            FractionFreeEchelon ech(ms.size());
            for (const Multidegree& sub : sub_multidegrees(d)) {
                if (total_of(sub) == 0) continue;
                Multidegree rest(d.size());
                for (std::size_t i = 0; i < d.size(); ++i)
                    rest[i] = d[i] - sub[i];
                for (const RationalPoly& inv : invariant_basis(sub))
                    for (const SuperMonomial& m2 : monomials(rest)) {
                        RationalPoly row = mul(inv, unit_rational(ctx, m2));
                        if (row.is_zero()) continue;
                        ech.insert(vectorize_poly(ms, row));
                    }
            }
            auto dim = static_cast<std::int64_t>(ms.size() - ech.rank());
            if (dim > 0) dims[d] = dim;
        }
    }
    return dims;
}

}  // namespace

GradedDims quotient_hilbert_oracle(int n, int k, int j, int degree_cap) {
    return diagonal_quotient_dims(RingContext::dihedral(n, k, j), degree_cap);
}

GradedDims cyclic_quotient_hilbert_oracle(int n, int k, int j, int degree_cap) {
    return diagonal_quotient_dims(RingContext::cyclic(n, k, j), degree_cap);
}

// ---------------------------------------------------------------------------
// x-coordinate ideal components.

IdealComponents::IdealComponents(const GroupAction& action) : action_(action) {}

const std::vector<SuperMonomial>& IdealComponents::monomials(const Multidegree& d) {
    auto it = monomials_.find(d);
    if (it == monomials_.end())
        it = monomials_
                 .emplace(d, monomials_of_multidegree(*action_.context(), d))
                 .first;
    return it->second;
}

const std::vector<RationalPoly>& IdealComponents::invariants(const Multidegree& d) {
    auto it = invariants_.find(d);
    if (it != invariants_.end()) return it->second;
    const auto& ms = monomials(d);
    std::vector<RationalPoly> basis;
    FractionFreeEchelon ech(ms.size());
    for (const SuperMonomial& m : ms) {
        CyclotomicPoly avg = action_.reynolds(
            unit_cyclotomic(action_.context(), action_.field(), m));
        if (avg.is_zero()) continue;
        RationalPoly r = action_.to_rational(avg);
        if (ech.insert(vectorize_poly(ms, r))) basis.push_back(std::move(r));
    }
    return invariants_.emplace(d, std::move(basis)).first->second;
}

const FractionFreeEchelon& IdealComponents::echelon(const Multidegree& d) {
    auto it = echelons_.find(d);
    if (it != echelons_.end()) return it->second;
    const auto& ms = monomials(d);
    FractionFreeEchelon ech(ms.size());
    for (const Multidegree& sub : sub_multidegrees(d)) {
        if (total_of(sub) == 0) continue;
        Multidegree rest(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) rest[i] = d[i] - sub[i];
        for (const RationalPoly& inv : invariants(sub))
            for (const SuperMonomial& m2 : monomials(rest)) {
                RationalPoly row = mul(inv, unit_rational(action_.context(), m2));
                if (row.is_zero()) continue;
                ech.insert(vectorize_poly(ms, row));
            }
    }
    return echelons_.emplace(d, std::move(ech)).first->second;
}

std::int64_t IdealComponents::quotient_dim(const Multidegree& d) {
    return static_cast<std::int64_t>(monomials(d).size() - echelon(d).rank());
}

std::vector<Rational> IdealComponents::vectorize(const Multidegree& d,
                                                 const RationalPoly& p) {
    return vectorize_poly(monomials(d), p);
}

// ---------------------------------------------------------------------------
// Character traces.

namespace {

std::map<Multidegree, std::vector<SuperMonomial>> basis_by_multidegree(
    const ContextPtr& ctx) {
    std::vector<SuperMonomial> basis = ctx->is_cyclic()
                                           ? superring::cyclic_basis_enumerate(ctx)
                                           : superring::basis_enumerate(ctx);
    std::map<Multidegree, std::vector<SuperMonomial>> by_degree;
    for (SuperMonomial& m : basis) {
        Multidegree d = multidegree(*ctx, m);
        by_degree[std::move(d)].push_back(std::move(m));
    }
    return by_degree;
}

Cyclotomic trace_on_component(const GroupAction& action, const GroupElement& g,
                              const std::vector<SuperMonomial>& basis) {
    Cyclotomic tr = action.field()->zero();
    for (const SuperMonomial& b : basis) {
        CyclotomicPoly image = superring::reduce_poly(action.act_monomial(g, b));
        if (const Cyclotomic* c = image.find(b)) tr += *c;
    }
    return tr;
}

}  // namespace

Cyclotomic character_trace_oracle(const GroupAction& action,
                                  const GroupElement& g, const Multidegree& d) {
    auto by_degree = basis_by_multidegree(action.context());
    auto it = by_degree.find(d);
    if (it == by_degree.end()) return action.field()->zero();
    return trace_on_component(action, g, it->second);
}

std::map<Multidegree, Cyclotomic> trace_map(const GroupAction& action,
                                            const GroupElement& g) {
    std::map<Multidegree, Cyclotomic> out;
    for (const auto& [d, basis] : basis_by_multidegree(action.context())) {
        Cyclotomic tr = trace_on_component(action, g, basis);
        if (!tr.is_zero()) out.emplace(d, std::move(tr));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Basis certification.

namespace {

SuperMonomial random_monomial(const RingContext& ctx, int max_total,
                              std::mt19937_64& rng) {
    SuperMonomial m = superring::constant_monomial(ctx);
    const int slots = ctx.num_bosonic() + ctx.num_fermionic();
    if (slots == 0) return m;
    int target = static_cast<int>(rng() % static_cast<std::uint64_t>(max_total + 1));
    for (int placed = 0; placed < target; ++placed) {
        bool done = false;
        for (int tries = 0; tries < 64 && !done; ++tries) {
            int slot = static_cast<int>(rng() % static_cast<std::uint64_t>(slots));
            if (slot < ctx.num_bosonic()) {
                ++m.bos[static_cast<std::size_t>(slot)];
                done = true;
            } else {
                int f = slot - ctx.num_bosonic();
                if (!(m.ferm >> f & 1)) {
                    m.ferm |= std::uint64_t(1) << f;
                    done = true;
                }
            }
        }
        if (!done) break;  // only saturated fermionic slots remain
    }
    return m;
}

CertifyReport certify_impl(const ContextPtr& ctx, const GroupAction& action,
                           const GradedDims& diagonal_dims,
                           const std::vector<SuperMonomial>& basis,
                           const std::vector<RationalPoly>& generators,
                           int samples, std::uint64_t seed) {
    CertifyReport report;
    report.n = ctx->n();
    report.k = ctx->k();
    report.j = ctx->j();
    report.cyclic = ctx->is_cyclic();
    report.samples = samples;
    report.total_monomials = static_cast<std::int64_t>(basis.size());

    auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };

    std::map<Multidegree, std::vector<SuperMonomial>> by_degree;
    for (const SuperMonomial& m : basis)
        by_degree[multidegree(*ctx, m)].push_back(m);

    IdealComponents components(action);

    // Union of multidegrees seen by either side.
    std::set<Multidegree> degrees;
    for (const auto& [d, ms] : by_degree) degrees.insert(d);
    for (const auto& [d, dim] : diagonal_dims) degrees.insert(d);

    for (const Multidegree& d : degrees) {
        CertifyEntry entry;
        entry.d = d;
        auto bit = by_degree.find(d);
        entry.basis_count =
            bit == by_degree.end() ? 0 : static_cast<std::int64_t>(bit->second.size());
        auto dit = diagonal_dims.find(d);
        entry.diagonal_dim = dit == diagonal_dims.end() ? 0 : dit->second;
        entry.x_dim = components.quotient_dim(d);
        entry.ok = entry.basis_count == entry.diagonal_dim &&
                   entry.basis_count == entry.x_dim;
        if (!entry.ok)
            fail("multidegree " + multidegree_to_string(d) + ": basis " +
                 std::to_string(entry.basis_count) + ", diagonal oracle " +
                 std::to_string(entry.diagonal_dim) + ", x oracle " +
                 std::to_string(entry.x_dim));

        // Independence modulo the ideal: each basis vector must grow
        // the span of the ideal component.
        if (bit != by_degree.end()) {
            FractionFreeEchelon ech = components.echelon(d);
            for (const SuperMonomial& b : bit->second) {
                RationalPoly unit = unit_rational(ctx, b);
                if (!ech.insert(components.vectorize(d, unit)))
                    fail("basis monomial " + monomial_to_string(*ctx, b) +
                         " is dependent modulo the ideal at " +
                         multidegree_to_string(d));
            }
        }
        report.entries.push_back(std::move(entry));
    }

    // The normal form must fix the basis pointwise...
    for (const SuperMonomial& b : basis) {
        superring::ReduceResult r = ctx->is_cyclic()
                                        ? superring::cyclic_reduce(ctx, b)
                                        : superring::reduce(ctx, b);
        if (r.sign != 1 || !(r.rep == b))
            fail("reduce is not the identity on basis monomial " +
                 monomial_to_string(*ctx, b));
    }
    // ...and kill every generator.
    for (const RationalPoly& gen : generators)
        if (!superring::reduce_poly(gen).is_zero())
            fail("an ideal generator does not reduce to zero: " + gen.to_string());

    // Random monomials: the difference m - reduce(m) must lie in the
    // ideal's component, checked by rank.
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(ctx->n()) << 32) ^
                        (static_cast<std::uint64_t>(ctx->k()) << 16) ^
                        static_cast<std::uint64_t>(ctx->j()));
    const int max_total = ctx->n() + 1;
    for (int s = 0; s < samples; ++s) {
        SuperMonomial m = random_monomial(*ctx, max_total, rng);
        superring::ReduceResult r = ctx->is_cyclic()
                                        ? superring::cyclic_reduce(ctx, m)
                                        : superring::reduce(ctx, m);
        RationalPoly diff = unit_rational(ctx, m);
        if (r.sign != 0) {
            if (!(multidegree(*ctx, r.rep) == multidegree(*ctx, m))) {
                fail("reduce changed the multidegree of " +
                     monomial_to_string(*ctx, m));
                continue;
            }
            diff -= unit_rational(ctx, r.rep).scaled(Rational(r.sign));
        }
        if (diff.is_zero()) continue;
        Multidegree d = multidegree(*ctx, m);
        if (!components.echelon(d).in_span(components.vectorize(d, diff)))
            fail("m - reduce(m) is not in the ideal for m = " +
                 monomial_to_string(*ctx, m));
    }

    report.pass = report.failures.empty();
    return report;
}

}  // namespace

CertifyReport certify_basis(int n, int k, int j, int samples,
                            std::uint64_t seed) {
    ContextPtr ctx = RingContext::dihedral(n, k, j);
    GroupAction action = GroupAction::dihedral(n, k, j);
    return certify_impl(ctx, action, quotient_hilbert_oracle(n, k, j, n + 2),
                        superring::basis_enumerate(ctx),
                        superring::ideal_generators(ctx), samples, seed);
}

CertifyReport cyclic_certify_basis(int n, int k, int j, int samples,
                                   std::uint64_t seed) {
    ContextPtr ctx = RingContext::cyclic(n, k, j);
    GroupAction action = GroupAction::cyclic(n, k, j);
    // The cyclic ideal is generated by the invariant monomials of
    // total degree n.
    std::vector<RationalPoly> generators;
    for (const Multidegree& d : multidegrees_of_total(*ctx, n))
        for (const SuperMonomial& m : monomials_of_multidegree(*ctx, d))
            generators.push_back(unit_rational(ctx, m));
    return certify_impl(ctx, action,
                        cyclic_quotient_hilbert_oracle(n, k, j, n + 2),
                        superring::cyclic_basis_enumerate(ctx), generators,
                        samples, seed);
}

// ---------------------------------------------------------------------------
// Closed form vs. oracle comparisons.

HilbertComparison compare_hilbert(const symfunc::GradingPoly& closed,
                                  const GradedDims& dims, int n) {
    HilbertComparison out;
    for (const auto& [d, c] : closed.terms()) {
        auto it = dims.find(d);
        std::int64_t dim = it == dims.end() ? 0 : it->second;
        if (BigInt(dim) != c)
            out.mismatches.push_back("coefficient at " + multidegree_to_string(d) +
                                     ": closed form " + c.get_str() + ", oracle " +
                                     std::to_string(dim));
    }
    for (const auto& [d, dim] : dims) {
        if (total_of(d) > n)
            out.mismatches.push_back("nonzero quotient component above degree n at " +
                                     multidegree_to_string(d));
        else if (closed.coeff(d) == 0)
            out.mismatches.push_back("oracle component missing from closed form at " +
                                     multidegree_to_string(d));
    }
    out.pass = out.mismatches.empty();
    return out;
}

namespace {

TraceComparison compare_trace_maps(const GroupAction& action,
                                   const series::CharacterSeries& closed,
                                   const std::vector<GroupElement>& reps) {
    TraceComparison out;
    for (const GroupElement& g : reps) {
        std::map<Multidegree, Cyclotomic> oracle_side = trace_map(action, g);
        std::map<Multidegree, Cyclotomic> closed_side = closed.evaluate_at(g);
        std::set<Multidegree> degrees;
        for (const auto& [d, v] : oracle_side) degrees.insert(d);
        for (const auto& [d, v] : closed_side) degrees.insert(d);
        for (const Multidegree& d : degrees) {
            Cyclotomic lhs = action.field()->zero();
            if (auto it = oracle_side.find(d); it != oracle_side.end())
                lhs = it->second;
            Cyclotomic rhs = action.field()->zero();
            if (auto it = closed_side.find(d); it != closed_side.end())
                rhs = it->second.embed(action.field());
            if (!(lhs == rhs))
                out.mismatches.push_back(
                    "trace of " + g.to_string() + " at " + multidegree_to_string(d) +
                    ": oracle " + lhs.to_string() + ", closed form " + rhs.to_string());
        }
    }
    out.pass = out.mismatches.empty();
    return out;
}

}  // namespace

TraceComparison compare_traces(int n, int k, int j) {
    GroupAction action = GroupAction::dihedral(n, k, j);
    std::vector<GroupElement> reps;
    for (const chartab::ConjClass& c : chartab::conjugacy_classes(n))
        reps.push_back(c.rep);
    return compare_trace_maps(action, series::character_series(n, k, j), reps);
}

TraceComparison cyclic_compare_traces(int n, int k, int j) {
    GroupAction action = GroupAction::cyclic(n, k, j);
    return compare_trace_maps(action, series::cyclic_character_series(n, k, j),
                              action.elements());
}

symfunc::GradingPoly chi2_multiplicity_oracle(int n, int k, int j) {
    GroupAction action = GroupAction::dihedral(n, k, j);
    std::map<Multidegree, Cyclotomic> sums;
    for (const chartab::ConjClass& cls : chartab::conjugacy_classes(n)) {
        Rational chi2 =
            chartab::dihedral_char_value(CharLabel::chi2(), cls.rep, n)
                .rational_value() *
            Rational(cls.size);
        for (const auto& [d, tr] : trace_map(action, cls.rep)) {
            auto [it, inserted] = sums.emplace(d, action.field()->zero());
            it->second += tr * chi2;
        }
    }
    symfunc::GradingPoly out(k + j);
    for (const auto& [d, total] : sums) {
        Rational mult = (total * Rational(1, 2 * n)).rational_value();
        if (mult == 0) continue;
        if (mult.get_den() != 1)
            throw std::logic_error("isotypic multiplicity is not an integer");
        out += symfunc::GradingPoly::monomial(d, BigInt(mult.get_num()));
    }
    return out;
}

std::vector<SpanComparison> generator_span_report(int n, int k, int j,
                                                  int degree_cap) {
    ContextPtr ctx = RingContext::dihedral(n, k, j);
    GroupAction action = GroupAction::dihedral(n, k, j);
    IdealComponents components(action);

    std::vector<std::pair<Multidegree, RationalPoly>> gens;
    for (RationalPoly& g : superring::ideal_generators(ctx)) {
        Multidegree d = multidegree(*ctx, g.terms().begin()->first);
        gens.emplace_back(std::move(d), std::move(g));
    }

    std::vector<SpanComparison> report;
    for (int t = 0; t <= degree_cap; ++t)
        for (const Multidegree& d : multidegrees_of_total(*ctx, t)) {
            const auto& ms = monomials_of_multidegree(*ctx, d);
            if (ms.empty()) continue;
            FractionFreeEchelon ech(ms.size());
            for (const auto& [dg, gen] : gens) {
                Multidegree rest(d.size());
                bool fits = true;
                for (std::size_t i = 0; i < d.size(); ++i) {
                    rest[i] = d[i] - dg[i];
                    if (rest[i] < 0) fits = false;
                }
                if (!fits) continue;
                for (const SuperMonomial& m2 : monomials_of_multidegree(*ctx, rest)) {
                    RationalPoly row = mul(gen, unit_rational(ctx, m2));
                    if (!row.is_zero()) ech.insert(vectorize_poly(ms, row));
                }
            }
            report.push_back(
                {d, ech.rank(), components.echelon(d).rank()});
        }
    return report;
}

}  // namespace coinv::oracle
