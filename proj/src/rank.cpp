#include "novb/rank.hpp"

#include <algorithm>

#include "novb/parallel.hpp"
#include "novb/rng.hpp"

namespace novb {

namespace {

void check_matrix(const LMat& m) {
    if (m.empty()) return;
    const std::size_t cols = m[0].size();
    int rank = -1;
    for (const auto& row : m) {
        if (row.size() != cols) fail(Errc::ShapeMismatch, "ragged matrix");
        for (const auto& e : row) {
            if (rank < 0) rank = e.rank();
            if (e.rank() != rank) fail(Errc::RankMismatch, "matrix entries of mixed polynomial rank");
        }
    }
}

int poly_rank_of(const LMat& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            return e.rank();
    return 1;
}

} // namespace

const std::vector<std::uint64_t>& sampling_primes() {
    static const std::vector<std::uint64_t> primes = {
        2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL,
        2147483563ULL, 2147483549ULL, 2147483543ULL, 2147483497ULL,
    };
    return primes;
}

int rank_exact(LMat m) {
    check_matrix(m);
    const std::size_t rows = lmat_rows(m), cols = lmat_cols(m);
    if (rows == 0 || cols == 0) return 0;
    const int prank = poly_rank_of(m);

    // Scale each row into the polynomial ring: multiplying a row by a
    // monomial unit does not change the rank, and keeps Bareiss quotients
    // inside Z[t_1..t_r].
    for (auto& row : m) {
        Exps mn(static_cast<std::size_t>(prank), 0);
        bool any = false;
        for (const auto& e : row) {
            if (e.is_zero()) continue;
            Exps em = e.min_exponents();
            if (!any) {
                mn = em;
                any = true;
            } else {
                for (std::size_t j = 0; j < mn.size(); ++j) mn[j] = std::min(mn[j], em[j]);
            }
        }
        if (!any) continue;
        Exps neg(mn.size());
        for (std::size_t j = 0; j < mn.size(); ++j) neg[j] = -mn[j];
        for (auto& e : row)
            if (!e.is_zero()) e = e.shifted(neg);
    }

    LaurentPoly prev = LaurentPoly::constant(prank, 1);
    std::size_t k = 0;
    while (k < rows && k < cols) {
        // pivot: fewest terms, then lowest total degree, then lowest column,
        // then lowest row — curbs intermediate expression swell
        std::size_t pi = rows, pj = cols;
        std::size_t best_terms = 0;
        std::int64_t best_deg = 0;
        for (std::size_t j = k; j < cols; ++j) {
            for (std::size_t i = k; i < rows; ++i) {
                const LaurentPoly& e = m[i][j];
                if (e.is_zero()) continue;
                const std::size_t nt = e.num_terms();
                const std::int64_t td = e.total_degree();
                if (pi == rows || nt < best_terms || (nt == best_terms && td < best_deg)) {
                    pi = i;
                    pj = j;
                    best_terms = nt;
                    best_deg = td;
                }
            }
        }
        if (pi == rows) break;
        std::swap(m[k], m[pi]);
        if (pj != k)
            for (std::size_t i = k; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly(prank);
        }
        prev = m[k][k];
        ++k;
    }
    return static_cast<int>(k);
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t piv = 0;
    for (std::size_t col = 0; col < cols && piv < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = piv; i < rows; ++i)
            if (m[i][col] % p != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[piv], m[sel]);
        const std::uint64_t inv = pow_mod(m[piv][col] % p, p - 2, p);
        for (std::size_t i = piv + 1; i < rows; ++i) {
            const std::uint64_t f = mul_mod(m[i][col] % p, inv, p);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                const std::uint64_t sub = mul_mod(f, m[piv][j] % p, p);
                m[i][j] = (m[i][j] % p + p - sub) % p;
            }
        }
        ++piv;
    }
    return static_cast<int>(piv);
}

int rank_at_point(const LMat& m, const std::vector<std::uint64_t>& point, std::uint64_t p) {
    check_matrix(m);
    const std::size_t rows = lmat_rows(m), cols = lmat_cols(m);
    if (rows == 0 || cols == 0) return 0;
    for (auto x : point)
        if (x % p == 0) fail(Errc::ZeroCoordinate, "evaluation point has a zero coordinate");
    std::vector<std::vector<std::uint64_t>> ev(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) ev[i][j] = m[i][j].eval_mod(point, p);
    return rank_mod_p(std::move(ev), p);
}

namespace {

std::vector<RankSample> make_samples(const LMat& m, const RankOptions& opts) {
    const int prank = poly_rank_of(m);
    const auto& primes = sampling_primes();
    SplitMix64 rng(opts.seed);
    std::vector<RankSample> samples;
    for (int a = 0; a < opts.num_primes; ++a) {
        const std::uint64_t p = primes[static_cast<std::size_t>(a) % primes.size()];
        for (int b = 0; b < opts.points_per_prime; ++b) {
            RankSample s;
            s.prime = p;
            s.point.resize(static_cast<std::size_t>(prank));
            for (auto& x : s.point) x = 1 + rng.below(p - 1);
            samples.push_back(std::move(s));
        }
    }
    return samples;
}

int run_samples(const LMat& m, const RankOptions& opts, std::vector<RankSample>& samples, bool parallel) {
    check_matrix(m);
    samples = make_samples(m, opts);
    if (lmat_rows(m) == 0 || lmat_cols(m) == 0) {
        for (auto& s : samples) s.rank = 0;
        return 0;
    }
    parallel_for(samples.size(), parallel,
                 [&](std::size_t i) { samples[i].rank = rank_at_point(m, samples[i].point, samples[i].prime); });
    int best = 0;
    for (const auto& s : samples) best = std::max(best, s.rank);
    return best;
}

} // namespace

int rank_modular(const LMat& m, const RankOptions& opts, std::vector<RankSample>& samples) {
    return run_samples(m, opts, samples, opts.parallel);
}

int rank_modular_serial(const LMat& m, const RankOptions& opts, std::vector<RankSample>& samples) {
    return run_samples(m, opts, samples, false);
}

RankResult rank_fraction_field(const LMat& m, const RankOptions& opts) {
    check_matrix(m);
    RankResult result;
    if (lmat_rows(m) == 0 || lmat_cols(m) == 0) {
        result.exact = true;
        return result;
    }
    const auto longest = std::max(lmat_rows(m), lmat_cols(m));
    const bool want_exact = opts.method == RankMethod::Exact ||
                            (opts.method == RankMethod::Auto &&
                             longest <= static_cast<std::size_t>(opts.exact_size_bound));
    if (opts.method != RankMethod::Exact) {
        result.value = rank_modular(m, opts, result.samples);
        for (const auto& s : result.samples)
            if (s.rank != result.value) result.unanimous = false;
    }
    if (want_exact) {
        const int exact = rank_exact(m);
        if (!result.samples.empty() && exact < result.value)
            throw std::logic_error("modular rank exceeded exact rank");
        result.value = exact;
        result.exact = true;
    }
    return result;
}

} // namespace novb
