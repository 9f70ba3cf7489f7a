#include "novb/zmatrix.hpp"

#include <cstdlib>

namespace novb {

namespace {

// Eliminates column `col` across rows [piv, m) by repeated Euclidean steps,
// leaving a single nonzero entry in row piv.  Returns false if the column is
// zero on that range.
bool reduce_column(ZMat& a, std::size_t piv, std::size_t col) {
    const std::size_t m = a.size();
    for (;;) {
        std::size_t best = m;
        for (std::size_t i = piv; i < m; ++i) {
            if (a[i][col] == 0) continue;
            if (best == m || cmp(abs(a[i][col]), abs(a[best][col])) < 0) best = i;
        }
        if (best == m) return false;
        std::swap(a[piv], a[best]);
        bool clean = true;
        for (std::size_t i = piv + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[piv][col].get_mpz_t());
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[piv][j];
            if (a[i][col] != 0) clean = false;
        }
        if (clean) break;
    }
    if (a[piv][col] < 0)
        for (auto& x : a[piv]) x = -x;
    return true;
}

} // namespace

ZMat hnf_row_basis(ZMat a) {
    if (a.empty()) return {};
    const std::size_t n = a[0].size();
    std::size_t piv = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < n && piv < a.size(); ++col) {
        if (!reduce_column(a, piv, col)) continue;
        // normalize entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < piv; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[piv][col].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[piv][j];
        }
        pivot_cols.push_back(col);
        ++piv;
    }
    a.resize(piv);
    return a;
}

std::optional<ZVec> lattice_coordinates(const ZMat& basis, const ZVec& v) {
    ZVec rem = v;
    ZVec coords(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // pivot = first nonzero entry of the echelon row
        std::size_t col = 0;
        while (col < basis[i].size() && basis[i][col] == 0) ++col;
        if (col == basis[i].size()) return std::nullopt; // zero basis row
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[col].get_mpz_t(), basis[i][col].get_mpz_t());
        if (r != 0) return std::nullopt;
        coords[i] = q;
        if (q != 0)
            for (std::size_t j = col; j < rem.size(); ++j) rem[j] -= q * basis[i][j];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return coords;
}

ZMat kernel_lattice(const ZMat& a, int num_cols) {
    const std::size_t m = a.size();
    const std::size_t n = static_cast<std::size_t>(num_cols);
    // rows of w are [column j of a | e_j]; eliminating the left block leaves
    // kernel vectors on the right
    ZMat w(n, ZVec(m + n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) w[j][i] = a[i][j];
        w[j][m + j] = 1;
    }
    std::size_t piv = 0;
    for (std::size_t col = 0; col < m && piv < n; ++col)
        if (reduce_column(w, piv, col)) ++piv;
    ZMat kernel;
    for (std::size_t i = piv; i < n; ++i) kernel.emplace_back(w[i].begin() + static_cast<long>(m), w[i].end());
    return hnf_row_basis(std::move(kernel));
}

int rank_rational(std::vector<std::vector<mpq_class>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t piv = 0;
    for (std::size_t col = 0; col < cols && piv < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = piv; i < rows; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[piv], m[sel]);
        for (std::size_t i = piv + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[piv][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[piv][j];
        }
        ++piv;
    }
    return static_cast<int>(piv);
}

int rank_integer(const ZMat& a) {
    std::vector<std::vector<mpq_class>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i].assign(a[i].begin(), a[i].end());
    return rank_rational(std::move(m));
}

} // namespace novb
