#include "novb/words.hpp"

#include "novb/errors.hpp"

namespace novb {

void FreeWord::push_reduced(int gen, std::int64_t exp) {
    if (exp == 0) return;
    if (!syllables_.empty() && syllables_.back().gen == gen) {
        syllables_.back().exp += exp;
        if (syllables_.back().exp == 0) syllables_.pop_back();
        return;
    }
    syllables_.push_back({gen, exp});
}

FreeWord FreeWord::generator(int gen, std::int64_t exp) {
    FreeWord w;
    w.push_reduced(gen, exp);
    return w;
}

FreeWord FreeWord::from_syllables(const std::vector<Syllable>& syllables) {
    FreeWord w;
    for (const auto& s : syllables) w.push_reduced(s.gen, s.exp);
    return w;
}

std::int64_t FreeWord::length() const {
    std::int64_t n = 0;
    for (const auto& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
    return n;
}

int FreeWord::max_generator() const {
    int m = -1;
    for (const auto& s : syllables_)
        if (s.gen > m) m = s.gen;
    return m;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.syllables_.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        w.syllables_.push_back({it->gen, -it->exp});
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    FreeWord w = *this;
    for (const auto& s : rhs.syllables_) w.push_reduced(s.gen, s.exp);
    return w;
}

std::vector<std::int64_t> FreeWord::exponent_sums(int num_gens) const {
    std::vector<std::int64_t> sums(static_cast<std::size_t>(num_gens), 0);
    for (const auto& s : syllables_) {
        if (s.gen < 0 || s.gen >= num_gens)
            fail(Errc::UnknownGenerator, "generator index " + std::to_string(s.gen) + " out of range");
        sums[static_cast<std::size_t>(s.gen)] += s.exp;
    }
    return sums;
}

std::string to_string(const FreeWord& w, const std::vector<std::string>& names) {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        if (s.gen >= 0 && static_cast<std::size_t>(s.gen) < names.size())
            out += names[static_cast<std::size_t>(s.gen)];
        else
            out += "x" + std::to_string(s.gen);
        if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
    return out;
}

} // namespace novb
