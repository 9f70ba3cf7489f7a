#ifndef NOVB_LAURENT_HPP
#define NOVB_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "novb/errors.hpp"

namespace novb {

// Exponent vector in Z^r.  64-bit per variable; overflow is an error, never
// wraparound.
using Exps = std::vector<std::int64_t>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::ExponentOverflow, "exponent addition overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::ExponentOverflow, "exponent product overflows 64 bits");
    return r;
}

// Exact multivariate Laurent polynomial over Z: a finite map from exponent
// vectors to nonzero big-integer coefficients.  The map's lexicographic key
// order is the canonical term order used for printing, equality and leading
// terms.  No floating point anywhere.
class LaurentPoly {
  public:
    explicit LaurentPoly(int rank = 1) : rank_(rank) {}

    static LaurentPoly constant(int rank, const mpz_class& c);
    static LaurentPoly monomial(int rank, const Exps& e, const mpz_class& c);
    static LaurentPoly variable(int rank, int var, std::int64_t exp = 1);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Exps, mpz_class>& terms() const { return terms_; }

    // Accumulate c * t^e, erasing the term if the coefficient cancels.
    void add_term(const Exps& e, const mpz_class& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const mpz_class& c) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Multiply by the monomial t^delta.
    LaurentPoly shifted(const Exps& delta) const;
    // The ring automorphism t_j -> t_j^-1 for every j.
    LaurentPoly inverted_variables() const;

    // Componentwise minimum of the exponent vectors (zero vector if empty).
    Exps min_exponents() const;
    // max over terms of the sum of exponents; 0 for the zero polynomial.
    std::int64_t total_degree() const;
    // gcd of the absolute coefficient values (0 for the zero polynomial).
    mpz_class content() const;

    // Extreme terms in the lexicographic order.
    const std::pair<const Exps, mpz_class>& leading_term() const;
    const std::pair<const Exps, mpz_class>& trailing_term() const;

    // Univariate (rank 1) helpers.
    std::int64_t min_degree() const;
    std::int64_t max_degree() const;
    mpz_class coefficient(const Exps& e) const;

    // Evaluation at a point of (F_p^*)^r; point values in [1, p-1].
    std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;
    // Exact evaluation at a rational point with all coordinates nonzero.
    mpq_class eval_rational(const std::vector<mpq_class>& point) const;

    std::string to_string(const std::vector<std::string>& variables = {}) const;

  private:
    int rank_;
    std::map<Exps, mpz_class> terms_;

    void check_rank(const LaurentPoly& rhs) const;
};

// Exact quotient a / b in Z[t_1^+-, ..., t_r^+-].  Throws std::logic_error
// if b does not divide a; used where divisibility is guaranteed (Bareiss
// pivots, minor expansion).
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
// Same, reporting failure instead of throwing.
bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// Row-major matrix of Laurent polynomials (possibly 0 x 0).
using LMat = std::vector<std::vector<LaurentPoly>>;

inline std::size_t lmat_rows(const LMat& m) { return m.size(); }
inline std::size_t lmat_cols(const LMat& m) { return m.empty() ? 0 : m[0].size(); }

} // namespace novb

#endif
