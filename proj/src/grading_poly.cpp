#include "coinv/grading_poly.hpp"

#include <numeric>
#include <stdexcept>

namespace coinv::symfunc {

bool MultidegreeOrder::operator()(const Multidegree& a, const Multidegree& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    // Within a total degree, higher leading exponents print first
    // ("q^2" before "q u" before "u^2").
    return a > b;
}

GradingPoly GradingPoly::one(int nvars) {
    return monomial(Multidegree(static_cast<std::size_t>(nvars), 0));
}

GradingPoly GradingPoly::monomial(Multidegree exps, BigInt coeff) {
    GradingPoly p(static_cast<int>(exps.size()));
    p.add_term(exps, coeff);
    return p;
}

GradingPoly GradingPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("variable index out of range");
    Multidegree e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(std::move(e));
}

BigInt GradingPoly::coeff(const Multidegree& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int GradingPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void GradingPoly::add_term(const Multidegree& exps, const BigInt& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GradingPoly& GradingPoly::operator+=(const GradingPoly& o) {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GradingPoly& GradingPoly::operator-=(const GradingPoly& o) {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GradingPoly GradingPoly::operator*(const GradingPoly& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("mixed variable counts");
    GradingPoly r(nvars_);
    Multidegree e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

GradingPoly GradingPoly::operator*(const BigInt& c) const {
    GradingPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

BigInt GradingPoly::eval_at_ones() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

GradingPoly GradingPoly::embed(int new_nvars, int offset) const {
    if (offset < 0 || nvars_ + offset > new_nvars)
        throw std::invalid_argument("embed target too small");
    GradingPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Multidegree w(static_cast<std::size_t>(new_nvars), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            w[i + static_cast<std::size_t>(offset)] = e[i];
        r.terms_.emplace(std::move(w), c);
    }
    return r;
}

std::string GradingPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
        throw std::invalid_argument("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        bool negative = c < 0;
        BigInt mag = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += " ";
            factors += names[i];
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + " ";
            out += factors;
        }
    }
    return out;
}

std::vector<std::string> grading_names(int k, int j) {
    std::vector<std::string> names;
    if (k == 2 && j == 0) {
        names = {"q", "t"};
        return names;
    }
    for (int i = 1; i <= k; ++i)
        names.push_back(k == 1 ? "q" : "q" + std::to_string(i));
    for (int i = 1; i <= j; ++i)
        names.push_back(j == 1 ? "u" : "u" + std::to_string(i));
    return names;
}

}  // namespace coinv::symfunc
