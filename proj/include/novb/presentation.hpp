#ifndef NOVB_PRESENTATION_HPP
#define NOVB_PRESENTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "novb/words.hpp"

namespace novb {

// A finite group presentation < x_1, ..., x_g | r_1, ..., r_m >.  Relators
// are kept freely reduced exactly as given (no cyclic reduction): the chain
// complex downstream is that of the literal presentation 2-complex, and Fox
// derivatives depend on the spelled word.
class Presentation {
  public:
    Presentation(std::vector<std::string> generator_names, std::vector<FreeWord> relators);

    int num_generators() const { return static_cast<int>(generator_names_.size()); }
    int num_relators() const { return static_cast<int>(relators_.size()); }

    const std::vector<std::string>& generator_names() const { return generator_names_; }
    const std::vector<FreeWord>& relators() const { return relators_; }
    const FreeWord& relator(int j) const { return relators_[static_cast<std::size_t>(j)]; }

    // Index of a named generator, or -1.
    int generator_index(std::string_view name) const;

    // Exponent-sum matrix of the relators: num_relators x num_generators.
    std::vector<std::vector<mpz_class>> relator_matrix() const;

    // Presentation 2-complex has cells (1, g, m).
    long long euler_characteristic() const { return 1LL - num_generators() + num_relators(); }
    long long deficiency() const { return static_cast<long long>(num_generators()) - num_relators(); }

  private:
    std::vector<std::string> generator_names_;
    std::vector<FreeWord> relators_;
};

// Parses `< g1, g2, ... | w1, w2, ... >`.  Words are juxtapositions of `gen`
// or `gen^k` (k a nonzero integer) separated by whitespace or `*`; a relator
// may be written `u = v`, meaning u v^-1; `1` denotes the empty word.
// Throws Error with SyntaxError / UnknownGenerator / ZeroExponent, all
// annotated with a 1-based character position.
Presentation parse_presentation(std::string_view text);

// Canonical text form; parse(to_text(parse(s))) == parse(s).
std::string to_text(const Presentation& p);

} // namespace novb

#endif
