#include "coinv/symfunc.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace coinv::symfunc {

namespace {

// Walks every semistandard filling of lam/nu with entries in 1..m:
// rows weakly increase, columns strictly increase. Skew cells of a
// column are contiguous, so the only vertical constraint is against
// the cell directly above.
void enumerate_ssyt(const Partition& lam, const Partition& nu, int m,
                    const std::function<void(const std::vector<int>&)>& emit) {
    const int rows = lam.length();
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        grid[static_cast<std::size_t>(r)].assign(
            static_cast<std::size_t>(lam.part(r)), 0);
    std::vector<int> weight(static_cast<std::size_t>(m), 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        while (r < rows && c >= lam.part(r)) {
            ++r;
            c = r < rows ? nu.part(r) : 0;
        }
        if (r == rows) {
            emit(weight);
            return;
        }
        int lo = 1;
        if (c > nu.part(r)) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && c < lam.part(r - 1) && c >= nu.part(r - 1))
            lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            grid[r][c] = v;
            ++weight[static_cast<std::size_t>(v - 1)];
            fill(r, c + 1);
            --weight[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(0, nu.part(0));
}

GradingPoly det(std::vector<std::vector<GradingPoly>> a, int m) {
    const std::size_t n = a.size();
    if (n == 0) return GradingPoly::one(m);
    if (n == 1) return a[0][0];
    GradingPoly acc = GradingPoly::zero(m);
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col].is_zero()) continue;
        std::vector<std::vector<GradingPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<GradingPoly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        GradingPoly cof = a[0][col] * det(std::move(minor), m);
        if (col % 2 == 0)
            acc += cof;
        else
            acc -= cof;
    }
    return acc;
}

}  // namespace

GradingPoly schur_poly(const Partition& lam, int m) {
    if (m < 0) throw std::invalid_argument("alphabet size must be >= 0");
    return skew_schur_poly(lam, Partition{}, m);
}

GradingPoly skew_schur_poly(const Partition& lam, const Partition& nu, int m) {
    if (m < 0) throw std::invalid_argument("alphabet size must be >= 0");
    GradingPoly out(m);
    if (!lam.contains(nu)) return out;
    enumerate_ssyt(lam, nu, m, [&](const std::vector<int>& weight) {
        out += GradingPoly::monomial(weight);
    });
    return out;
}

GradingPoly complete_homogeneous(int r, int m) {
    if (r < 0) return GradingPoly::zero(m);
    return skew_schur_poly(Partition::row(r), Partition{}, m);
}

GradingPoly skew_schur_jacobi_trudi(const Partition& lam, const Partition& nu,
                                    int m) {
    if (m < 0) throw std::invalid_argument("alphabet size must be >= 0");
    const int n = lam.length();
    std::vector<std::vector<GradingPoly>> a(
        static_cast<std::size_t>(n),
        std::vector<GradingPoly>(static_cast<std::size_t>(n), GradingPoly(m)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = complete_homogeneous(lam.part(i) - nu.part(j) - i + j, m);
    return det(std::move(a), m);
}

GradingPoly super_schur(const Partition& lam, int k, int j) {
    if (k < 0 || j < 0) throw std::invalid_argument("k, j must be >= 0");
    GradingPoly out(k + j);
    const Partition lam_t = lam.transpose();
    for (const Partition& nu : lam.subpartitions()) {
        GradingPoly q_part = schur_poly(nu, k);
        if (q_part.is_zero()) continue;
        GradingPoly u_part = skew_schur_poly(lam_t, nu.transpose(), j);
        if (u_part.is_zero()) continue;
        out += q_part.embed(k + j, 0) * u_part.embed(k + j, k);
    }
    return out;
}

BigInt super_schur_at_ones(const Partition& lam, int k, int j) {
    if (k < 0 || j < 0) throw std::invalid_argument("k, j must be >= 0");
    const int m = lam.size();
    const bool is_row = lam.length() <= 1;
    const bool is_col = lam.empty() || lam.part(0) == 1;
    BigInt s = 0;
    if (is_row) {
        for (int l = 0; l <= m; ++l)
            s += binomial(k + l - 1, l) * binomial(j, m - l);
    } else if (is_col) {
        for (int l = 0; l <= m; ++l)
            s += binomial(k, l) * binomial(j + m - l - 1, m - l);
    } else {
        throw std::invalid_argument(
            "closed all-ones form only covers row and column shapes");
    }
    return s;
}

}  // namespace coinv::symfunc
