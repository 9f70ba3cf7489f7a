#include "novb/laurent.hpp"

#include <algorithm>

namespace novb {

LaurentPoly LaurentPoly::constant(int rank, const mpz_class& c) {
    LaurentPoly p(rank);
    p.add_term(Exps(static_cast<std::size_t>(rank), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int rank, const Exps& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != rank) fail(Errc::RankMismatch, "exponent vector length != rank");
    LaurentPoly p(rank);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int rank, int var, std::int64_t exp) {
    Exps e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(var)] = exp;
    return monomial(rank, e, 1);
}

void LaurentPoly::add_term(const Exps& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_rank(const LaurentPoly& rhs) const {
    if (rank_ != rhs.rank_)
        fail(Errc::RankMismatch, "polynomial ranks differ (" + std::to_string(rank_) + " vs " +
                                     std::to_string(rhs.rank_) + ")");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(rank_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_rank(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_rank(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly p = *this;
    p += rhs;
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly p = *this;
    p -= rhs;
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    check_rank(rhs);
    LaurentPoly p(rank_);
    Exps e(static_cast<std::size_t>(rank_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = checked_add(ea[j], eb[j]);
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

LaurentPoly LaurentPoly::operator*(const mpz_class& c) const {
    LaurentPoly p(rank_);
    if (c == 0) return p;
    for (const auto& [e, coeff] : terms_) p.terms_.emplace(e, coeff * c);
    return p;
}

LaurentPoly LaurentPoly::shifted(const Exps& delta) const {
    if (static_cast<int>(delta.size()) != rank_) fail(Errc::RankMismatch, "shift vector length != rank");
    LaurentPoly p(rank_);
    Exps e(static_cast<std::size_t>(rank_));
    for (const auto& [ea, c] : terms_) {
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = checked_add(ea[j], delta[j]);
        p.terms_.emplace(e, c);
    }
    return p;
}

LaurentPoly LaurentPoly::inverted_variables() const {
    LaurentPoly p(rank_);
    Exps e(static_cast<std::size_t>(rank_));
    for (const auto& [ea, c] : terms_) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (ea[j] == INT64_MIN) fail(Errc::ExponentOverflow, "cannot negate INT64_MIN exponent");
            e[j] = -ea[j];
        }
        p.terms_.emplace(e, c);
    }
    return p;
}

Exps LaurentPoly::min_exponents() const {
    Exps m(static_cast<std::size_t>(rank_), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = std::min(m[j], e[j]);
        }
    }
    return m;
}

std::int64_t LaurentPoly::total_degree() const {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t s = 0;
        for (auto x : e) s = checked_add(s, x);
        if (first || s > d) d = s;
        first = false;
    }
    return d;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

const std::pair<const Exps, mpz_class>& LaurentPoly::leading_term() const {
    if (terms_.empty()) fail(Errc::ZeroElement, "zero polynomial has no leading term");
    return *terms_.rbegin();
}

const std::pair<const Exps, mpz_class>& LaurentPoly::trailing_term() const {
    if (terms_.empty()) fail(Errc::ZeroElement, "zero polynomial has no trailing term");
    return *terms_.begin();
}

std::int64_t LaurentPoly::min_degree() const {
    if (rank_ != 1) fail(Errc::RankMismatch, "min_degree needs rank 1");
    return trailing_term().first[0];
}

std::int64_t LaurentPoly::max_degree() const {
    if (rank_ != 1) fail(Errc::RankMismatch, "max_degree needs rank 1");
    return leading_term().first[0];
}

mpz_class LaurentPoly::coefficient(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t LaurentPoly::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    if (static_cast<int>(point.size()) != rank_) fail(Errc::RankMismatch, "point length != rank");
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t v = mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
        for (std::size_t j = 0; j < e.size(); ++j) {
            // x^(p-1) = 1 for x in F_p^*, so reduce the exponent mod p-1
            std::int64_t r = e[j] % static_cast<std::int64_t>(p - 1);
            if (r < 0) r += static_cast<std::int64_t>(p - 1);
            v = mul_mod(v, pow_mod(point[j], static_cast<std::uint64_t>(r), p), p);
        }
        acc = (acc + v) % p;
    }
    return acc;
}

mpq_class LaurentPoly::eval_rational(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != rank_) fail(Errc::RankMismatch, "point length != rank");
    for (const auto& x : point)
        if (x == 0) fail(Errc::ZeroCoordinate, "evaluation point has a zero coordinate");
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class v(c);
        for (std::size_t j = 0; j < e.size(); ++j) {
            mpz_class num = point[j].get_num(), den = point[j].get_den();
            std::int64_t k = e[j];
            if (k < 0) {
                std::swap(num, den);
                k = -k;
            }
            mpq_class powed;
            mpz_pow_ui(powed.get_num().get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
            mpz_pow_ui(powed.get_den().get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
            powed.canonicalize();
            v *= powed;
        }
        acc += v;
    }
    return acc;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& variables) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](std::size_t j) {
        if (j < variables.size()) return variables[j];
        if (rank_ == 1) return std::string("t");
        return "t" + std::to_string(j + 1);
    };
    std::string out;
    // print highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool has_var = std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; });
        if (a != 1 || !has_var) out += a.get_str();
        bool printed = a != 1 || !has_var;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (printed) out += "*";
            out += var_name(j);
            if (e[j] != 1) out += "^" + std::to_string(e[j]);
            printed = true;
        }
    }
    return out;
}

namespace {

// Division in Z[t_1..t_r] with nonnegative exponents by leading-term
// elimination in the lexicographic order; both inputs shifted by the caller.
bool poly_exact_div(const LaurentPoly& a, const LaurentPoly& b, int rank, LaurentPoly& q) {
    q = LaurentPoly(rank);
    LaurentPoly rem = a;
    const auto& bl = b.leading_term();
    Exps diff(static_cast<std::size_t>(rank));
    while (!rem.is_zero()) {
        const auto& rl = rem.leading_term();
        bool ok = true;
        for (std::size_t j = 0; j < diff.size(); ++j) {
            diff[j] = rl.first[j] - bl.first[j];
            if (diff[j] < 0) ok = false;
        }
        if (!ok) return false;
        mpz_class qc, rc;
        mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), rl.second.get_mpz_t(), bl.second.get_mpz_t());
        if (rc != 0) return false;
        LaurentPoly step = LaurentPoly::monomial(rank, diff, qc);
        q += step;
        rem -= step * b;
    }
    return true;
}

} // namespace

bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient) {
    if (a.rank() != b.rank()) fail(Errc::RankMismatch, "exact_div rank mismatch");
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        quotient = LaurentPoly(a.rank());
        return true;
    }
    // shift both factors into the polynomial ring; monomials are units, so
    // divisibility is unaffected and the quotient shifts back
    Exps ma = a.min_exponents(), mb = b.min_exponents();
    Exps neg_ma(ma.size()), neg_mb(mb.size()), delta(ma.size());
    for (std::size_t j = 0; j < ma.size(); ++j) {
        neg_ma[j] = -ma[j];
        neg_mb[j] = -mb[j];
        delta[j] = checked_add(ma[j], -mb[j]);
    }
    LaurentPoly q;
    if (!poly_exact_div(a.shifted(neg_ma), b.shifted(neg_mb), a.rank(), q)) return false;
    quotient = q.shifted(delta);
    return true;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q;
    if (!try_exact_div(a, b, q))
        throw std::logic_error("exact_div: division left the Laurent polynomial ring");
    return q;
}

} // namespace novb
