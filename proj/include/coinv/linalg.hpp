#pragma once

#include <cstddef>
#include <vector>

#include "coinv/numeric.hpp"

namespace coinv::oracle {

/// Incremental row-space basis over the rationals, kept as an integer
/// echelon via fraction-free cross-multiplication steps; every row is
/// made content-primitive after elimination so entries stay small.
/// rank() is the number of stored pivot rows.
class FractionFreeEchelon {
 public:
    explicit FractionFreeEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces the row against the current basis and stores it when
    /// independent. Returns true when the rank grew.
    bool insert(const std::vector<Rational>& row);

    /// Membership in the current row space; does not modify the basis.
    bool in_span(const std::vector<Rational>& row) const;

 private:
    std::vector<BigInt> scale_to_integers(const std::vector<Rational>& row) const;
    /// Eliminates all pivot columns; the result is empty when the row
    /// is dependent.
    std::vector<BigInt> eliminate(std::vector<BigInt> row) const;

    std::size_t cols_;
    std::vector<std::vector<BigInt>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Rank of a dense rational matrix.
std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows,
                        std::size_t cols);

}  // namespace coinv::oracle
