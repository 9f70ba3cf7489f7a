#ifndef NOVB_RANK_HPP
#define NOVB_RANK_HPP

#include <cstdint>
#include <vector>

#include "novb/laurent.hpp"

namespace novb {

enum class RankMethod { Exact, Modular, Auto };

// One modular evaluation witness: the matrix specialized at `point` over
// F_prime had the stated rank.
struct RankSample {
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> point;
    int rank = 0;
};

// Rank under specialization never exceeds the rank over the fraction field,
// so the sampled value is a certified lower bound; it is reported as the
// rank itself only per the policy in RankOptions (and flagged probabilistic
// unless an exact elimination confirmed it).
struct RankResult {
    int value = 0;
    bool exact = false;     // an exact elimination produced/confirmed the value
    bool unanimous = true;  // all modular samples agreed
    std::vector<RankSample> samples;
};

struct RankOptions {
    RankMethod method = RankMethod::Auto;
    int num_primes = 3;        // primes near 2^31, fixed list
    int points_per_prime = 5;
    int exact_size_bound = 10; // Auto: confirm exactly when max(rows, cols) <= bound
    std::uint64_t seed = 0;
    bool parallel = true;
};

// Fraction-free Bareiss elimination over Z[t_1..t_r]; every division is
// exact and asserted.  Pivot rule: fewest terms, then lowest total degree,
// then lowest column, then lowest row.
int rank_exact(LMat m);

// Rank of the specialization of m at `point` over F_p.
int rank_at_point(const LMat& m, const std::vector<std::uint64_t>& point, std::uint64_t p);

// Max rank over the sampled evaluations; OpenMP-parallel over samples.
// The sample list is derived from the seed before the parallel region, so
// the result is independent of thread count.
int rank_modular(const LMat& m, const RankOptions& opts, std::vector<RankSample>& samples);

// Plain-loop reference implementation of rank_modular (kept for tests and
// the benchmark).
int rank_modular_serial(const LMat& m, const RankOptions& opts, std::vector<RankSample>& samples);

// Dispatch per options; Auto runs the sampler and confirms exactly on small
// matrices.
RankResult rank_fraction_field(const LMat& m, const RankOptions& opts = {});

// Gaussian elimination rank over F_p (p an odd prime < 2^32).
int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

// The fixed sampling primes (largest primes below 2^31).
const std::vector<std::uint64_t>& sampling_primes();

} // namespace novb

#endif
