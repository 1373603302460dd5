#include "coinv/linalg.hpp"

#include <stdexcept>

namespace coinv::oracle {

namespace {

void make_primitive(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const BigInt& v : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g == 0 || g == 1) return;
    for (BigInt& v : row) v /= g;
}

}  // namespace

std::vector<BigInt> FractionFreeEchelon::scale_to_integers(
    const std::vector<Rational>& row) const {
    if (row.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    BigInt lcm = 1;
    for (const Rational& v : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<BigInt> out(cols_);
    for (std::size_t i = 0; i < cols_; ++i)
        out[i] = row[i].get_num() * (lcm / row[i].get_den());
    return out;
}

std::vector<BigInt> FractionFreeEchelon::eliminate(std::vector<BigInt> row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (row[p] == 0) continue;
        const BigInt a = rows_[r][p], b = row[p];
        for (std::size_t c = 0; c < cols_; ++c)
            row[c] = row[c] * a - rows_[r][c] * b;
        make_primitive(row);
    }
    return row;
}

bool FractionFreeEchelon::insert(const std::vector<Rational>& row) {
    std::vector<BigInt> v = eliminate(scale_to_integers(row));
    std::size_t pivot = cols_;
    for (std::size_t c = 0; c < cols_; ++c)
        if (v[c] != 0) {
            pivot = c;
            break;
        }
    if (pivot == cols_) return false;
    if (v[pivot] < 0)
        for (BigInt& x : v) x = -x;
    // Keep rows ordered by pivot column so elimination sweeps once.
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
}

bool FractionFreeEchelon::in_span(const std::vector<Rational>& row) const {
    std::vector<BigInt> v = eliminate(scale_to_integers(row));
    for (const BigInt& x : v)
        if (x != 0) return false;
    return true;
}

std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows,
                        std::size_t cols) {
    FractionFreeEchelon ech(cols);
    for (const auto& row : rows) ech.insert(row);
    return ech.rank();
}

}  // namespace coinv::oracle
