#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "coinv/series.hpp"
#include "coinv/straighten.hpp"
#include "coinv/superring.hpp"

using namespace coinv;
using superring::ContextPtr;
using superring::RationalPoly;
using superring::RingContext;
using superring::SuperMonomial;

namespace {

RationalPoly unit(const ContextPtr& ctx, const SuperMonomial& m) {
    return RationalPoly::monomial(ctx, m, Rational(1));
}

RationalPoly bos(const ContextPtr& ctx, int set, int idx, int exp = 1) {
    return unit(ctx, superring::bosonic_monomial(
                         *ctx, ctx->bosonic_index(set, idx), exp));
}

RationalPoly ferm(const ContextPtr& ctx, int set, int idx) {
    return unit(ctx,
                superring::fermionic_monomial(*ctx, ctx->fermionic_index(set, idx)));
}

SuperMonomial random_monomial(const RingContext& ctx, std::mt19937_64& rng) {
    SuperMonomial m = superring::constant_monomial(ctx);
    for (int g = 0; g < ctx.num_bosonic(); ++g)
        m.bos[static_cast<std::size_t>(g)] = static_cast<int>(rng() % 3);
    if (ctx.num_fermionic() > 0)
        m.ferm = rng() & ((std::uint64_t(1) << ctx.num_fermionic()) - 1);
    return m;
}

}  // namespace

TEST_CASE("supercommutative multiplication signs") {
    auto ctx = RingContext::dihedral(3, 1, 1);
    // theta squares vanish.
    CHECK(mul(ferm(ctx, 0, 0), ferm(ctx, 0, 0)).is_zero());
    // transposition sign.
    RationalPoly t12 = mul(ferm(ctx, 0, 0), ferm(ctx, 0, 1));
    RationalPoly t21 = mul(ferm(ctx, 0, 1), ferm(ctx, 0, 0));
    CHECK(t21 == t12.scaled(Rational(-1)));
    // bosonic generators are central, no sign.
    RationalPoly xt = mul(bos(ctx, 0, 0), ferm(ctx, 0, 0));
    RationalPoly tx = mul(ferm(ctx, 0, 0), bos(ctx, 0, 0));
    CHECK(xt == tx);
    CHECK(xt.term_count() == 1);
    CHECK(*xt.find(xt.terms().begin()->first) == 1);
}

TEST_CASE("multiplication is associative and supercommutative") {
    auto ctx = RingContext::dihedral(3, 2, 2);
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        SuperMonomial ma = random_monomial(*ctx, rng);
        SuperMonomial mb = random_monomial(*ctx, rng);
        SuperMonomial mc = random_monomial(*ctx, rng);
        RationalPoly a = unit(ctx, ma), b = unit(ctx, mb), c = unit(ctx, mc);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        // a b = (-1)^(|a||b|) b a for parity = fermionic degree.
        int parity = ma.fermionic_degree() * mb.fermionic_degree();
        RationalPoly ab = mul(a, b);
        RationalPoly ba = mul(b, a);
        CHECK(ab == (parity % 2 == 0 ? ba : ba.scaled(Rational(-1))));
    }
}

TEST_CASE("mixed contexts are rejected") {
    auto a = RingContext::dihedral(3, 1, 0);
    auto b = RingContext::dihedral(4, 1, 0);
    CHECK_THROWS_AS(mul(bos(a, 0, 0), bos(b, 0, 0)), std::invalid_argument);
}

TEST_CASE("polarization operators") {
    // E_1 on the quadratic invariant of the first set.
    auto ctx = RingContext::dihedral(4, 2, 0);
    RationalPoly p = mul(bos(ctx, 0, 0), bos(ctx, 0, 0)) +
                     mul(bos(ctx, 0, 1), bos(ctx, 0, 1));
    RationalPoly moved = polarize(1, p);
    RationalPoly expect = (mul(bos(ctx, 0, 0), bos(ctx, 1, 0)) +
                           mul(bos(ctx, 0, 1), bos(ctx, 1, 1)))
                              .scaled(Rational(2));
    CHECK(moved == expect);

    // E_k sends x1^(k) to t1^(1).
    auto ctx2 = RingContext::dihedral(4, 1, 1);
    CHECK(polarize(1, bos(ctx2, 0, 0)) == ferm(ctx2, 0, 0));

    // Composite chains land on the quadratic generator families.
    auto ctx3 = RingContext::dihedral(5, 2, 2);
    RationalPoly inv = mul(bos(ctx3, 0, 0), bos(ctx3, 0, 0)) +
                       mul(bos(ctx3, 0, 1), bos(ctx3, 0, 1));
    RationalPoly q = inv;
    for (int ell : {1, 2, 3}) q = polarize(ell, q);  // towards fermionic set 2
    RationalPoly xt = mul(bos(ctx3, 0, 0), ferm(ctx3, 1, 0)) +
                      mul(bos(ctx3, 0, 1), ferm(ctx3, 1, 1));
    CHECK(q == xt.scaled(Rational(2)));
    for (int ell : {1, 2}) q = polarize(ell, q);  // then fermionic set 1
    RationalPoly tt = mul(ferm(ctx3, 0, 0), ferm(ctx3, 1, 0)) +
                      mul(ferm(ctx3, 0, 1), ferm(ctx3, 1, 1));
    CHECK(q == tt.scaled(Rational(2)));

    CHECK_THROWS_AS(polarize(4, bos(ctx3, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(polarize(0, bos(ctx3, 0, 0)), std::invalid_argument);
}

TEST_CASE("ideal generator families") {
    // k = 1, j = 0: exactly the quadratic invariant and x1^n.
    for (int n = 2; n <= 5; ++n) {
        auto ctx = RingContext::dihedral(n, 1, 0);
        auto gens = superring::ideal_generators(ctx);
        CHECK(gens.size() == 2);
        RationalPoly quad = mul(bos(ctx, 0, 0), bos(ctx, 0, 0)) +
                            mul(bos(ctx, 0, 1), bos(ctx, 0, 1));
        RationalPoly power = bos(ctx, 0, 0, n);
        CHECK((gens[0] == quad || gens[1] == quad));
        CHECK((gens[0] == power || gens[1] == power));
    }

    // Family sizes count by stars and bars.
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int j = 0; j <= 3; ++j) {
                auto ctx = RingContext::dihedral(n, k, j);
                BigInt expect = binomial(k + 1, 2) + BigInt(k) * j +
                                binomial(j, 2);
                for (int h = 0; h <= n; ++h)
                    expect += binomial(j, h) * binomial(k + n - h - 1, n - h);
                CHECK(BigInt(superring::ideal_generators(ctx).size()) == expect);
            }
}

TEST_CASE("polarization maps generators to multiples of generators") {
    for (int n : {2, 3}) {
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j) {
                if (k + j < 2) continue;
                auto ctx = RingContext::dihedral(n, k, j);
                auto gens = superring::ideal_generators(ctx);
                for (int ell = 1; ell <= k + j - 1; ++ell) {
                    for (const RationalPoly& g : gens) {
                        RationalPoly image = polarize(ell, g);
                        if (image.is_zero()) continue;
                        bool proportional = false;
                        for (const RationalPoly& h : gens) {
                            if (h.term_count() != image.term_count()) continue;
                            const auto& [m0, c0] = *image.terms().begin();
                            const Rational* ch = h.find(m0);
                            if (!ch) continue;
                            if (image == h.scaled(c0 / *ch)) {
                                proportional = true;
                                break;
                            }
                        }
                        CHECK(proportional);
                    }
                }
            }
    }
}

TEST_CASE("basis fixtures") {
    // k = 1, j = 0: powers of x1 and the same times x2.
    for (int n = 2; n <= 6; ++n) {
        auto ctx = RingContext::dihedral(n, 1, 0);
        auto basis = superring::basis_enumerate(ctx);
        CHECK(basis.size() == std::size_t(2 * n));
        std::set<SuperMonomial> want;
        for (int a = 0; a <= n - 1; ++a) {
            SuperMonomial m = superring::bosonic_monomial(*ctx, 0, a);
            want.insert(m);
            m.bos[1] = 1;
            want.insert(m);
        }
        CHECK(std::set<SuperMonomial>(basis.begin(), basis.end()) == want);
    }

    // k = 0, j = 1: {1, t1, t2, t1 t2}.
    for (int n = 2; n <= 5; ++n) {
        auto ctx = RingContext::dihedral(n, 0, 1);
        auto basis = superring::basis_enumerate(ctx);
        CHECK(basis.size() == 4);
    }

    // n = 2, k = 2: 9 = (n+1)^2 monomials.
    CHECK(superring::basis_enumerate(RingContext::dihedral(2, 2, 0)).size() == 9);
}

TEST_CASE("basis cardinality equals the closed-form dimension") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k <= 4; ++k)
            for (int j = 0; j <= 4; ++j) {
                auto ctx = RingContext::dihedral(n, k, j);
                CHECK(BigInt(superring::basis_enumerate(ctx).size()) ==
                      series::dimension(n, k, j));
            }
}

TEST_CASE("n = 2 base-case count") {
    for (int k = 0; k <= 4; ++k)
        for (int j = 0; j <= 4; ++j) {
            BigInt expect = 1 + 2 * k + 2 * j + 2 * k * j + binomial(k, 2) +
                            binomial(k + 1, 2) + binomial(j, 2) +
                            binomial(j + 1, 2);
            CHECK(BigInt(superring::basis_enumerate(
                             RingContext::dihedral(2, k, j))
                             .size()) == expect);
        }
}

TEST_CASE("basis growth follows the counting identities") {
    for (int k = 0; k <= 3; ++k)
        for (int j = 0; j <= 3; ++j)
            for (int n = 2; n <= 5; ++n) {
                auto small = superring::basis_enumerate(
                    RingContext::dihedral(n, k, j));
                auto large = superring::basis_enumerate(
                    RingContext::dihedral(n + 1, k, j));
                std::set<SuperMonomial> large_set(large.begin(), large.end());
                for (const SuperMonomial& m : small)
                    CHECK(large_set.count(m) == 1);
                BigInt diff = BigInt(large.size()) - BigInt(small.size());
                BigInt expect = 0;
                for (int h = 0; h <= n + 1; ++h)
                    expect += binomial(j, h) * binomial(k + n - h, n + 1 - h);
                for (int h = 0; h <= n; ++h)
                    expect += binomial(j, h) * binomial(k + n - h - 1, n - h);
                CHECK(diff == expect);
            }
}

TEST_CASE("per-multidegree basis counts match the Hilbert series") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int j = 0; j <= 3; ++j) {
                auto ctx = RingContext::dihedral(n, k, j);
                std::map<superring::Multidegree, BigInt> counts;
                for (const SuperMonomial& m : superring::basis_enumerate(ctx))
                    counts[superring::multidegree(*ctx, m)] += 1;
                symfunc::GradingPoly h = series::hilbert_series(n, k, j);
                CHECK(counts.size() == h.terms().size());
                for (const auto& [d, c] : counts) CHECK(h.coeff(d) == c);
            }
}

TEST_CASE("reduce fixtures") {
    // (x2)^2 -> -(x1)^2.
    auto ctx = RingContext::dihedral(4, 1, 0);
    SuperMonomial x2sq = superring::bosonic_monomial(*ctx, 1, 2);
    auto r = superring::reduce(ctx, x2sq);
    CHECK(r.sign == -1);
    CHECK(r.rep == superring::bosonic_monomial(*ctx, 0, 2));

    // (x1)^n -> 0.
    for (int n = 2; n <= 5; ++n) {
        auto c = RingContext::dihedral(n, 1, 0);
        CHECK(superring::reduce(c, superring::bosonic_monomial(*c, 0, n)).is_zero());
    }

    // x1^(1) x1^(2) x2^(2) -> + (x1^(2))^2 x2^(1) for n >= 3.
    for (int n : {3, 4, 5}) {
        auto c = RingContext::dihedral(n, 2, 0);
        SuperMonomial m = superring::constant_monomial(*c);
        m.bos[static_cast<std::size_t>(c->bosonic_index(0, 0))] = 1;
        m.bos[static_cast<std::size_t>(c->bosonic_index(1, 0))] = 1;
        m.bos[static_cast<std::size_t>(c->bosonic_index(1, 1))] = 1;
        auto rr = superring::reduce(c, m);
        SuperMonomial want = superring::constant_monomial(*c);
        want.bos[static_cast<std::size_t>(c->bosonic_index(1, 0))] = 2;
        want.bos[static_cast<std::size_t>(c->bosonic_index(0, 1))] = 1;
        CHECK(rr.sign == 1);
        CHECK(rr.rep == want);
    }

    // t1^(1) t1^(2) t2^(2) -> 0.
    auto cf = RingContext::dihedral(3, 0, 2);
    SuperMonomial tm = superring::constant_monomial(*cf);
    tm.ferm = (1u << cf->fermionic_index(0, 0)) |
              (1u << cf->fermionic_index(1, 0)) |
              (1u << cf->fermionic_index(1, 1));
    CHECK(superring::reduce(cf, tm).is_zero());

    // Bare same-set pair is a basis element.
    SuperMonomial bare = superring::constant_monomial(*cf);
    bare.ferm = (1u << cf->fermionic_index(0, 0)) |
                (1u << cf->fermionic_index(0, 1));
    auto rb = superring::reduce(cf, bare);
    CHECK(rb.sign == 1);
    CHECK(rb.rep == bare);
}

TEST_CASE("reduce is idempotent on the basis and preserves multidegree") {
    std::mt19937_64 rng(777);
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j) {
                auto ctx = RingContext::dihedral(n, k, j);
                for (const SuperMonomial& b : superring::basis_enumerate(ctx)) {
                    auto r = superring::reduce(ctx, b);
                    CHECK(r.sign == 1);
                    CHECK(r.rep == b);
                }
                for (int trial = 0; trial < 40; ++trial) {
                    SuperMonomial m = random_monomial(*ctx, rng);
                    auto r = superring::reduce(ctx, m);
                    if (r.sign == 0) continue;
                    CHECK(superring::multidegree(*ctx, r.rep) ==
                          superring::multidegree(*ctx, m));
                    auto again = superring::reduce(ctx, r.rep);
                    CHECK(again.sign == 1);
                    CHECK(again.rep == r.rep);
                }
            }
}

TEST_CASE("reduce lands inside the enumerated basis") {
    std::mt19937_64 rng(4242);
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j) {
                auto ctx = RingContext::dihedral(n, k, j);
                auto basis = superring::basis_enumerate(ctx);
                std::set<SuperMonomial> basis_set(basis.begin(), basis.end());
                for (int trial = 0; trial < 80; ++trial) {
                    auto r = superring::reduce(ctx, random_monomial(*ctx, rng));
                    if (r.sign != 0) CHECK(basis_set.count(r.rep) == 1);
                }
            }
}

TEST_CASE("reduce_poly basics") {
    auto ctx = RingContext::dihedral(3, 2, 1);
    for (const RationalPoly& g : superring::ideal_generators(ctx))
        CHECK(superring::reduce_poly(g).is_zero());
    // (x2)^2 + (x1)^2 -> 0 by the sign-flip rule.
    RationalPoly p = mul(bos(ctx, 0, 1), bos(ctx, 0, 1)) +
                     mul(bos(ctx, 0, 0), bos(ctx, 0, 0));
    CHECK(superring::reduce_poly(p).is_zero());
    for (const SuperMonomial& b : superring::basis_enumerate(ctx))
        CHECK(superring::reduce_poly(unit(ctx, b)) == unit(ctx, b));
}

TEST_CASE("cyclic basis and reduce") {
    for (int n = 1; n <= 6; ++n) {
        auto ctx = RingContext::cyclic(n, 1, 0);
        auto basis = superring::cyclic_basis_enumerate(ctx);
        CHECK(basis.size() == std::size_t(n));
    }
    auto ctx = RingContext::cyclic(2, 0, 2);
    auto basis = superring::cyclic_basis_enumerate(ctx);
    CHECK(basis.size() == 3);  // 1, t_1, t_2

    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int j = 0; j <= 3; ++j) {
                auto c = RingContext::cyclic(n, k, j);
                CHECK(BigInt(superring::cyclic_basis_enumerate(c).size()) ==
                      series::cyclic_dimension(n, k, j));
                for (const SuperMonomial& b : superring::cyclic_basis_enumerate(c)) {
                    auto r = superring::cyclic_reduce(c, b);
                    CHECK(r.sign == 1);
                    CHECK(r.rep == b);
                }
            }
}

TEST_CASE("monomial serialization") {
    auto ctx = RingContext::dihedral(5, 2, 1);
    SuperMonomial m = superring::constant_monomial(*ctx);
    m.bos[static_cast<std::size_t>(ctx->bosonic_index(0, 0))] = 3;  // x1_1^3
    m.bos[static_cast<std::size_t>(ctx->bosonic_index(1, 1))] = 1;  // x2_2
    m.ferm = std::uint64_t(1) << ctx->fermionic_index(0, 0);        // t1_1
    CHECK(superring::monomial_to_string(*ctx, m) == "x1_1^3 x2_2 t1_1");
    CHECK(superring::monomial_to_string(
              *ctx, superring::constant_monomial(*ctx)) == "1");

    auto cyc = RingContext::cyclic(3, 2, 1);
    SuperMonomial cm = superring::constant_monomial(*cyc);
    cm.bos[1] = 2;
    cm.ferm = 1;
    CHECK(superring::monomial_to_string(*cyc, cm) == "x_2^2 t_1");
}

TEST_CASE("monomial enumeration by multidegree") {
    auto ctx = RingContext::dihedral(3, 2, 1);
    auto monos = superring::monomials_of_multidegree(*ctx, {2, 0, 1});
    // Three ways to spread degree 2 over {x1_1, x2_1}, times two
    // fermionic choices in set 1.
    CHECK(monos.size() == 6);
    for (const SuperMonomial& m : monos)
        CHECK(superring::multidegree(*ctx, m) == superring::Multidegree{2, 0, 1});

    auto degs = superring::multidegrees_of_total(*ctx, 2);
    std::set<superring::Multidegree> seen(degs.begin(), degs.end());
    CHECK(seen.count({2, 0, 0}) == 1);
    CHECK(seen.count({1, 1, 0}) == 1);
    CHECK(seen.count({0, 0, 2}) == 1);  // both fermionic slots of the set
    CHECK(seen.size() == 6);

    auto cyc = RingContext::cyclic(3, 1, 2);
    auto cdegs = superring::multidegrees_of_total(*cyc, 2);
    // fermionic entries are capped at the set width 1
    for (const auto& d : cdegs) {
        CHECK(d[1] <= 1);
        CHECK(d[2] <= 1);
    }
}
