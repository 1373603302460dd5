#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coinv/series.hpp"
#include "coinv/symfunc.hpp"

using namespace coinv;
using chartab::CharLabel;
using series::CharacterSeries;
using symfunc::GradingPoly;
using symfunc::Partition;

namespace {

GradingPoly qt_monomial(int a, int b, int c = 1) {
    return GradingPoly::monomial({a, b}, c);
}

// [m]_{q,t} = q^(m-1) + q^(m-2) t + ... + t^(m-1).
GradingPoly qt_staircase(int m) {
    GradingPoly p(2);
    for (int h = 0; h < m; ++h) p += qt_monomial(m - 1 - h, h);
    return p;
}

}  // namespace

TEST_CASE("universal coefficients") {
    using Key = std::pair<Partition, CharLabel>;
    auto c3 = series::universal_coefficients(3);
    CHECK(c3.size() == 5);
    CHECK(c3.at(Key{Partition{}, CharLabel::chi1()}) == 1);
    CHECK(c3.at(Key{Partition{1, 1}, CharLabel::chi2()}) == 1);
    CHECK(c3.at(Key{Partition{3}, CharLabel::chi2()}) == 1);
    CHECK(c3.at(Key{Partition{1}, CharLabel::two_dim(1)}) == 1);
    CHECK(c3.at(Key{Partition{2}, CharLabel::two_dim(1)}) == 1);

    auto c4 = series::universal_coefficients(4);
    CHECK(c4.count(Key{Partition{2}, CharLabel::chi3()}) == 1);
    CHECK(c4.count(Key{Partition{2}, CharLabel::chi4()}) == 1);

    auto c2 = series::universal_coefficients(2);
    CHECK(c2.size() == 5);
    CHECK(c2.count(Key{Partition{1}, CharLabel::chi3()}) == 1);
    CHECK(c2.count(Key{Partition{1}, CharLabel::chi4()}) == 1);
    for (const auto& [key, coeff] : c2) CHECK(coeff == 1);

    CHECK_THROWS_AS(series::universal_coefficients(1), std::invalid_argument);
}

TEST_CASE("singly graded character series is the graded regular representation") {
    for (int n = 2; n <= 8; ++n) {
        CharacterSeries s = series::character_series(n, 1, 0);
        GradingPoly chi1 = s.label_coefficient(CharLabel::chi1());
        CHECK(chi1 == GradingPoly::one(1));
        GradingPoly chi2 = s.label_coefficient(CharLabel::chi2());
        CHECK(chi2 == GradingPoly::monomial({n}));
        for (int i = 1; i <= (n - 1) / 2; ++i) {
            GradingPoly expect = GradingPoly::monomial({i});
            expect += GradingPoly::monomial({n - i});
            CHECK(s.label_coefficient(CharLabel::two_dim(i)) == expect);
        }
        if (n % 2 == 0) {
            CHECK(s.label_coefficient(CharLabel::chi3()) ==
                  GradingPoly::monomial({n / 2}));
            CHECK(s.label_coefficient(CharLabel::chi4()) ==
                  GradingPoly::monomial({n / 2}));
        }
    }
}

TEST_CASE("character series with no variables is the trivial character") {
    for (int n = 2; n <= 6; ++n) {
        CharacterSeries s = series::character_series(n, 0, 0);
        CHECK(s.terms().size() == 1);
        CHECK(s.terms()[0].label == CharLabel::chi1());
        CHECK(s.terms()[0].shape == Partition{});
    }
}

TEST_CASE("bigraded series matches the classical k=2 expansion") {
    for (int n = 2; n <= 8; ++n) {
        CharacterSeries s = series::character_series(n, 2, 0);

        CHECK(s.label_coefficient(CharLabel::chi1()) == GradingPoly::one(2));

        // chi2: q t plus the full antidiagonal of total degree n.
        GradingPoly chi2 = qt_monomial(1, 1);
        for (int i = 0; i <= n; ++i) chi2 += qt_monomial(n - i, i);
        CHECK(s.label_coefficient(CharLabel::chi2()) == chi2);

        // chi^i: both antidiagonals of total degrees i and n - i.
        for (int i = 1; i <= (n - 1) / 2; ++i) {
            GradingPoly expect(2);
            for (int h = 0; h <= i; ++h) expect += qt_monomial(i - h, h);
            for (int h = 0; h <= n - i; ++h) expect += qt_monomial(n - i - h, h);
            CHECK(s.label_coefficient(CharLabel::two_dim(i)) == expect);
        }

        if (n % 2 == 0) {
            GradingPoly half(2);
            for (int i = 0; i <= n / 2; ++i) half += qt_monomial(n / 2 - i, i);
            CHECK(s.label_coefficient(CharLabel::chi3()) == half);
            CHECK(s.label_coefficient(CharLabel::chi4()) == half);
        }
    }
}

TEST_CASE("hilbert series fixtures") {
    GradingPoly h = series::hilbert_series(3, 1, 1);
    // Frozen expansion: 1 + 2q + 2u + 2q^2 + 3qu + u^2 + q^3 + q^2 u.
    CHECK(h.coeff({0, 0}) == 1);
    CHECK(h.coeff({1, 0}) == 2);
    CHECK(h.coeff({0, 1}) == 2);
    CHECK(h.coeff({2, 0}) == 2);
    CHECK(h.coeff({1, 1}) == 3);
    CHECK(h.coeff({0, 2}) == 1);
    CHECK(h.coeff({3, 0}) == 1);
    CHECK(h.coeff({2, 1}) == 1);
    CHECK(h.terms().size() == 8);
    CHECK(h.eval_at_ones() == 13);  // 4n + 1 at n = 3

    for (int n = 2; n <= 6; ++n) {
        GradingPoly h01 = series::hilbert_series(n, 0, 1);
        GradingPoly expect = GradingPoly::one(1) +
                             GradingPoly::monomial({1}, 2) +
                             GradingPoly::monomial({2});
        CHECK(h01 == expect);

        GradingPoly h10 = series::hilbert_series(n, 1, 0);
        CHECK(h10.coeff({0}) == 1);
        CHECK(h10.coeff({n}) == 1);
        for (int i = 1; i < n; ++i) CHECK(h10.coeff({i}) == 2);
        CHECK(h10.eval_at_ones() == 2 * n);
    }
}

TEST_CASE("character series at the identity is the Hilbert series") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j) {
                CharacterSeries s = series::character_series(n, k, j);
                CHECK(s.hilbert() == series::hilbert_series(n, k, j));
                auto at_identity =
                    s.evaluate_at(chartab::GroupElement::identity());
                GradingPoly closed = series::hilbert_series(n, k, j);
                CHECK(at_identity.size() == closed.terms().size());
                for (const auto& [d, v] : at_identity)
                    CHECK(v.rational_value() == Rational(closed.coeff(d)));
            }
}

TEST_CASE("dimension fixtures and consistency") {
    CHECK(series::dimension(3, 2, 0) == 16);
    CHECK(series::dimension(6, 3, 0) == 142);
    CHECK(series::dimension(5, 1, 2) == 40);
    for (int n = 2; n <= 8; ++n) {
        CHECK(series::dimension(n, 0, 1) == 4);
        if (n > 2) CHECK(series::dimension(n, 0, 2) == 10);
    }
    CHECK(series::dimension(2, 0, 2) == 9);

    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k <= 4; ++k)
            for (int j = 0; j <= 4; ++j)
                CHECK(series::hilbert_series(n, k, j).eval_at_ones() ==
                      series::dimension(n, k, j));
}

TEST_CASE("catalan series") {
    for (int n = 2; n <= 8; ++n) {
        GradingPoly cat = series::catalan_series(n, 2, 0);
        GradingPoly expect = qt_staircase(n + 1) + qt_monomial(1, 1);
        CHECK(cat == expect);
        CHECK(cat.eval_at_ones() == n + 2);

        // Extracting chi2 from the character series reproduces it.
        CharacterSeries s = series::character_series(n, 2, 0);
        CHECK(s.label_coefficient(CharLabel::chi2()) == cat);
    }
    CHECK(series::catalan_series(4, 0, 0).is_zero());

    // chi2 extraction agrees in the general multigraded setting too.
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int j = 0; j <= 2; ++j)
                CHECK(series::character_series(n, k, j)
                          .label_coefficient(CharLabel::chi2()) ==
                      series::catalan_series(n, k, j));
}

TEST_CASE("qt specialization") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 2; k <= 4; ++k)
            for (int j = 0; j <= 2; ++j)
                CHECK(series::qt_specialization(series::catalan_series(n, k, j),
                                                k, j) ==
                      series::catalan_series(n, 2, 0));
    CHECK_THROWS_AS(
        series::qt_specialization(series::catalan_series(3, 1, 1), 1, 1),
        std::invalid_argument);
}

TEST_CASE("constant term belongs to the trivial character only") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j) {
                CharacterSeries s = series::character_series(n, k, j);
                for (const auto& term : s.terms()) {
                    bool constant_shape = term.shape.empty();
                    CHECK(constant_shape == (term.label == CharLabel::chi1()));
                }
            }
}

TEST_CASE("cyclic closed forms") {
    for (int n = 1; n <= 8; ++n) {
        GradingPoly h = series::cyclic_hilbert(n, 1, 0);
        for (int i = 0; i < n; ++i) CHECK(h.coeff({i}) == 1);
        CHECK(h.eval_at_ones() == n);
        CHECK(series::cyclic_dimension(n, 1, 0) == n);
    }
    CHECK(series::cyclic_dimension(3, 1, 1) == 5);

    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int j = 0; j <= 3; ++j) {
                CHECK(series::cyclic_hilbert(n, k, j).eval_at_ones() ==
                      series::cyclic_dimension(n, k, j));
                CharacterSeries s = series::cyclic_character_series(n, k, j);
                CHECK(s.hilbert() == series::cyclic_hilbert(n, k, j));
            }
}

TEST_CASE("series input validation") {
    CHECK_THROWS_AS(series::character_series(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(series::hilbert_series(3, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(series::cyclic_character_series(0, 1, 0),
                    std::invalid_argument);
}
