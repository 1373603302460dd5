#include "coinv/series.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coinv/symfunc.hpp"

namespace coinv::series {

CharacterSeries::CharacterSeries(int group_order, int k, int j, bool cyclic,
                                 std::vector<SeriesTerm> terms)
    : n_(group_order), k_(k), j_(j), cyclic_(cyclic), terms_(std::move(terms)) {
    std::set<std::pair<Partition, CharLabel>> seen;
    const int max_len = cyclic_ ? 1 : 2;
    for (const SeriesTerm& t : terms_) {
        if (t.coeff <= 0)
            throw std::invalid_argument("series coefficients must be positive");
        if (t.shape.length() > max_len)
            throw std::invalid_argument("series shape too long");
        chartab::validate_label(t.label, n_);
        if (!seen.emplace(t.shape, t.label).second)
            throw std::invalid_argument("duplicate (shape, label) term");
    }
}

GradingPoly CharacterSeries::label_coefficient(const CharLabel& label) const {
    GradingPoly out(k_ + j_);
    for (const SeriesTerm& t : terms_)
        if (t.label == label)
            out += symfunc::super_schur(t.shape, k_, j_) * t.coeff;
    return out;
}

GradingPoly CharacterSeries::hilbert() const {
    GradingPoly out(k_ + j_);
    for (const SeriesTerm& t : terms_)
        out += symfunc::super_schur(t.shape, k_, j_) *
               (t.coeff * chartab::char_dimension(t.label, n_));
    return out;
}

std::map<Multidegree, Cyclotomic> CharacterSeries::evaluate_at(
    const GroupElement& g) const {
    if (cyclic_ && g.reflection)
        throw std::invalid_argument("cyclic series evaluated at a reflection");
    auto field = chartab::CyclotomicField::get(n_);
    std::map<Multidegree, Cyclotomic> out;
    for (const SeriesTerm& t : terms_) {
        Cyclotomic chi =
            cyclic_ ? chartab::cyclic_char_value(t.label.index, g.exponent, n_)
                    : chartab::dihedral_char_value(t.label, g, n_);
        if (chi.is_zero()) continue;
        GradingPoly p = symfunc::super_schur(t.shape, k_, j_) * t.coeff;
        for (const auto& [deg, c] : p.terms()) {
            auto [it, inserted] = out.emplace(deg, field->zero());
            it->second += chi * Rational(c);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::string CharacterSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const SeriesTerm& t : terms_) {
        if (!out.empty()) out += " + ";
        std::string factor;
        if (!t.shape.empty()) factor = "s" + t.shape.to_string() + " ";
        if (t.coeff != 1) factor = t.coeff.get_str() + " " + factor;
        out += factor + t.label.to_string();
    }
    return out;
}

std::map<std::pair<Partition, CharLabel>, BigInt> universal_coefficients(int n) {
    if (n < 2) throw std::invalid_argument("dihedral series needs n >= 2");
    std::map<std::pair<Partition, CharLabel>, BigInt> c;
    c[{Partition{}, CharLabel::chi1()}] = 1;
    c[{Partition{1, 1}, CharLabel::chi2()}] = 1;
    c[{Partition::row(n), CharLabel::chi2()}] = 1;
    if (n % 2 == 0) {
        c[{Partition::row(n / 2), CharLabel::chi3()}] = 1;
        c[{Partition::row(n / 2), CharLabel::chi4()}] = 1;
    }
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        c[{Partition::row(i), CharLabel::two_dim(i)}] = 1;
        c[{Partition::row(n - i), CharLabel::two_dim(i)}] = 1;
    }
    return c;
}

CharacterSeries character_series(int n, int k, int j) {
    if (k < 0 || j < 0) throw std::invalid_argument("k, j must be >= 0");
    std::vector<SeriesTerm> terms;
    for (const auto& [key, coeff] : universal_coefficients(n)) {
        const auto& [shape, label] = key;
        // lambda_{k+1} <= j is exactly when the super Schur symbol
        // survives.
        if (shape.part(k) > j) continue;
        terms.push_back({coeff, shape, label});
    }
    return CharacterSeries(n, k, j, false, std::move(terms));
}

GradingPoly hilbert_series(int n, int k, int j) {
    if (n < 2) throw std::invalid_argument("dihedral series needs n >= 2");
    if (k < 0 || j < 0) throw std::invalid_argument("k, j must be >= 0");
    GradingPoly h = GradingPoly::one(k + j);
    h += symfunc::super_schur(Partition{1, 1}, k, j);
    h += symfunc::super_schur(Partition::row(n), k, j);
    for (int i = 1; i <= n - 1; ++i)
        h += symfunc::super_schur(Partition::row(i), k, j) * BigInt(2);
    return h;
}

BigInt dimension(int n, int k, int j) {
    if (n < 2) throw std::invalid_argument("dihedral series needs n >= 2");
    if (k < 0 || j < 0) throw std::invalid_argument("k, j must be >= 0");
    BigInt d = 1 + binomial(k, 2) + BigInt(k) * j + binomial(j + 1, 2);
    for (int h = 0; h <= n; ++h)
        d += binomial(j, h) * binomial(k + n - h - 1, n - h);
    for (int i = 1; i <= n - 1; ++i)
        for (int h = 0; h <= i; ++h)
            d += 2 * binomial(j, h) * binomial(k + i - h - 1, i - h);
    return d;
}

GradingPoly catalan_series(int n, int k, int j) {
    if (n < 2) throw std::invalid_argument("dihedral series needs n >= 2");
    return symfunc::super_schur(Partition::row(n), k, j) +
           symfunc::super_schur(Partition{1, 1}, k, j);
}

GradingPoly qt_specialization(const GradingPoly& p, int k, int j) {
    if (k < 2)
        throw std::invalid_argument(
            "the q,t specialization is only defined for k >= 2");
    if (p.nvars() != k + j)
        throw std::invalid_argument("variable count does not match (k, j)");
    GradingPoly out(2);
    for (const auto& [e, c] : p.terms()) {
        bool survives = true;
        for (std::size_t i = 2; i < e.size(); ++i)
            if (e[i] != 0) { survives = false; break; }
        if (survives) out += GradingPoly::monomial({e[0], e[1]}, c);
    }
    return out;
}

CharacterSeries cyclic_character_series(int n, int k, int j) {
    if (n < 1) throw std::invalid_argument("cyclic series needs n >= 1");
    if (k < 0 || j < 0) throw std::invalid_argument("k, j must be >= 0");
    std::vector<SeriesTerm> terms;
    for (int i = 0; i < n; ++i) {
        Partition shape = Partition::row(i);
        if (shape.part(k) > j) continue;
        terms.push_back({BigInt(1), shape, CharLabel::cyclic(i)});
    }
    return CharacterSeries(n, k, j, true, std::move(terms));
}

GradingPoly cyclic_hilbert(int n, int k, int j) {
    if (n < 1) throw std::invalid_argument("cyclic series needs n >= 1");
    GradingPoly h(k + j);
    for (int i = 0; i < n; ++i)
        h += symfunc::super_schur(Partition::row(i), k, j);
    return h;
}

BigInt cyclic_dimension(int n, int k, int j) {
    if (n < 1) throw std::invalid_argument("cyclic series needs n >= 1");
    BigInt d = 0;
    for (int i = 0; i < n; ++i)
        for (int l = 0; l <= i; ++l)
            d += binomial(k + l - 1, l) * binomial(j, i - l);
    return d;
}

}  // namespace coinv::series
