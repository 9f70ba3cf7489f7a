#ifndef NOVB_WORDS_HPP
#define NOVB_WORDS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace novb {

// One maximal run g^e of a word, e != 0.
struct Syllable {
    int gen;
    std::int64_t exp;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A freely reduced word in a free group.  The canonical form (adjacent
// syllables have distinct generators, all exponents nonzero) is an invariant
// of construction, so equality of words is equality of group elements.
class FreeWord {
  public:
    FreeWord() = default; // identity

    static FreeWord generator(int gen, std::int64_t exp = 1);
    // Reduces an arbitrary syllable sequence to canonical form.
    static FreeWord from_syllables(const std::vector<Syllable>& syllables);

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }
    // Word length: sum of |exponent|.
    std::int64_t length() const;
    // Largest generator index used; -1 for the identity.
    int max_generator() const;

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& rhs) const;

    // Exponent-sum (abelianization) vector over num_gens generators.
    std::vector<std::int64_t> exponent_sums(int num_gens) const;

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  private:
    std::vector<Syllable> syllables_;

    void push_reduced(int gen, std::int64_t exp);
};

inline FreeWord free_reduce(const std::vector<Syllable>& syllables) {
    return FreeWord::from_syllables(syllables);
}

// Debug/printing form, e.g. "a b^-2" with names, or "x0 x1^-2" without.
std::string to_string(const FreeWord& w, const std::vector<std::string>& names = {});

} // namespace novb

#endif
