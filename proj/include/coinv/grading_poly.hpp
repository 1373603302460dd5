#pragma once

#include <map>
#include <string>
#include <vector>

#include "coinv/numeric.hpp"

namespace coinv::symfunc {

/// Multidegree in the grading variables: one nonnegative entry per
/// variable. Ordered graded-lexicographically so printed output lists
/// low total degree first.
using Multidegree = std::vector<int>;

struct MultidegreeOrder {
    bool operator()(const Multidegree& a, const Multidegree& b) const;
};

/// Polynomial with integer coefficients in a fixed number of grading
/// variables. Exponent vectors are dense; no zero coefficients are
/// stored. Immutable value semantics: all operations return new values.
class GradingPoly {
 public:
    using TermMap = std::map<Multidegree, BigInt, MultidegreeOrder>;

    explicit GradingPoly(int nvars = 0) : nvars_(nvars) {}
    static GradingPoly zero(int nvars) { return GradingPoly(nvars); }
    static GradingPoly one(int nvars);
    static GradingPoly monomial(Multidegree exps, BigInt coeff = 1);
    /// Single variable, q_index in [0, nvars).
    static GradingPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(const Multidegree& exps) const;
    int total_degree() const;  // -1 for the zero polynomial

    GradingPoly& operator+=(const GradingPoly& o);
    GradingPoly& operator-=(const GradingPoly& o);
    friend GradingPoly operator+(GradingPoly a, const GradingPoly& b) { return a += b; }
    friend GradingPoly operator-(GradingPoly a, const GradingPoly& b) { return a -= b; }
    GradingPoly operator*(const GradingPoly& o) const;
    GradingPoly operator*(const BigInt& c) const;
    friend bool operator==(const GradingPoly&, const GradingPoly&) = default;

    /// Sum of all coefficients, i.e. evaluation at every variable = 1.
    BigInt eval_at_ones() const;

    /// Reinterpret in a wider variable set, mapping variable i to
    /// variable i + offset.
    GradingPoly embed(int new_nvars, int offset) const;

    /// Plain-text form like "1 + 2 q + 3 q u + u^2" under the given
    /// variable names (names.size() == nvars).
    std::string to_string(const std::vector<std::string>& names) const;

 private:
    void add_term(const Multidegree& exps, const BigInt& coeff);

    int nvars_;
    TermMap terms_;
};

/// Variable names for a (k, j) grading context: "q"/"u" when a block
/// has one variable, "q","t" for the classic bigraded k = 2, j = 0
/// case, otherwise q1..qk, u1..uj.
std::vector<std::string> grading_names(int k, int j);

}  // namespace coinv::symfunc
