#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coinv/chartab.hpp"
#include "coinv/grading_poly.hpp"
#include "coinv/numeric.hpp"
#include "coinv/partition.hpp"

namespace coinv::series {

using chartab::CharLabel;
using chartab::Cyclotomic;
using chartab::GroupElement;
using symfunc::GradingPoly;
using symfunc::Multidegree;
using symfunc::Partition;

/// One symbolic term: coeff * s_shape(q/u) * label.
struct SeriesTerm {
    BigInt coeff;
    Partition shape;
    CharLabel label;
};

/// Formal sum of super Schur symbols times irreducible characters.
/// Stores the symbols; expansion through symfunc happens on demand.
class CharacterSeries {
 public:
    CharacterSeries(int group_order, int k, int j, bool cyclic,
                    std::vector<SeriesTerm> terms);

    int n() const { return n_; }
    int k() const { return k_; }
    int j() const { return j_; }
    bool cyclic() const { return cyclic_; }
    const std::vector<SeriesTerm>& terms() const { return terms_; }

    /// Sum of coeff * s_shape(q/u) over the terms carrying `label`.
    GradingPoly label_coefficient(const CharLabel& label) const;

    /// Evaluation at the identity: coeff * dim(label) * s_shape(q/u),
    /// i.e. the Hilbert series this character series predicts.
    GradingPoly hilbert() const;

    /// Evaluation at a group element: multidegree -> character value,
    /// over Q(zeta_n). Zero values are dropped.
    std::map<Multidegree, Cyclotomic> evaluate_at(const GroupElement& g) const;

    std::string to_string() const;

 private:
    int n_, k_, j_;
    bool cyclic_;
    std::vector<SeriesTerm> terms_;
};

/// The universal coefficients c_{lambda,mu} for I2(n): independent of
/// (k, j), every listed pair has coefficient 1 and everything else is
/// absent.
std::map<std::pair<Partition, CharLabel>, BigInt> universal_coefficients(int n);

/// The multigraded character series of the dihedral coinvariant ring in
/// k bosonic and j fermionic sets; terms whose super Schur symbol
/// vanishes (shape_{k+1} > j) are dropped.
CharacterSeries character_series(int n, int k, int j);

/// Closed-form multigraded Hilbert series:
/// 1 + s_(1,1)(q/u) + s_(n)(q/u) + 2 sum_{i=1}^{n-1} s_(i)(q/u).
GradingPoly hilbert_series(int n, int k, int j);

/// Total dimension, by the closed binomial formula. Always equals
/// hilbert_series(n,k,j) at all ones.
BigInt dimension(int n, int k, int j);

/// Graded multiplicity of the sign character chi2:
/// s_(n)(q/u) + s_(1,1)(q/u).
GradingPoly catalan_series(int n, int k, int j);

/// Restriction to two bosonic variables: keeps q1, q2 and sets the
/// other q's and every u to zero. Only defined for k >= 2.
GradingPoly qt_specialization(const GradingPoly& p, int k, int j);

/// Cyclic-group analogues: sum_{i=0}^{n-1} s_(i)(q/u) chi_i.
CharacterSeries cyclic_character_series(int n, int k, int j);
GradingPoly cyclic_hilbert(int n, int k, int j);
BigInt cyclic_dimension(int n, int k, int j);

}  // namespace coinv::series
