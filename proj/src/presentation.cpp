#include "novb/presentation.hpp"

#include <cctype>
#include <set>

#include "novb/errors.hpp"

namespace novb {

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<FreeWord> relators)
    : generator_names_(std::move(generator_names)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const auto& name : generator_names_) {
        if (name.empty()) fail(Errc::SyntaxError, "empty generator name");
        if (!seen.insert(name).second) fail(Errc::SyntaxError, "duplicate generator '" + name + "'");
    }
    for (const auto& r : relators_) {
        if (r.max_generator() >= num_generators())
            fail(Errc::UnknownGenerator, "relator uses generator index " +
                                             std::to_string(r.max_generator()) + " but only " +
                                             std::to_string(num_generators()) + " generators exist");
        for (const auto& s : r.syllables())
            if (s.gen < 0) fail(Errc::UnknownGenerator, "negative generator index in relator");
    }
}

int Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generator_names_.size(); ++i)
        if (generator_names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<mpz_class>> Presentation::relator_matrix() const {
    std::vector<std::vector<mpz_class>> m(relators_.size(),
                                          std::vector<mpz_class>(static_cast<std::size_t>(num_generators()), 0));
    for (std::size_t j = 0; j < relators_.size(); ++j)
        for (const auto& s : relators_[j].syllables())
            m[j][static_cast<std::size_t>(s.gen)] += mpz_class(static_cast<long>(s.exp));
    return m;
}

namespace {

// Single-pass tokenizer/parser; positions are 1-based character offsets.
class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Presentation run() {
        expect('<');
        std::vector<std::string> gens = generator_list();
        expect('|');
        names_ = &gens;
        std::vector<FreeWord> relators = relator_list(gens);
        expect('>');
        skip_space();
        if (pos_ < text_.size()) fail_here("trailing input after '>'");
        return Presentation(std::move(gens), std::move(relators));
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    const std::vector<std::string>* names_ = nullptr;

    [[noreturn]] void fail_here(const std::string& msg, Errc code = Errc::SyntaxError) {
        fail(code, msg + " at position " + std::to_string(pos_ + 1));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail_here(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool try_consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string identifier() {
        skip_space();
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail_here("expected identifier");
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t integer() {
        skip_space();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail_here("expected integer");
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int digit = text_[pos_] - '0';
            if (value > (INT64_MAX - digit) / 10) {
                pos_ = start;
                fail_here("exponent too large");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return neg ? -value : value;
    }

    std::vector<std::string> generator_list() {
        std::vector<std::string> gens;
        if (peek() == '|') return gens;
        gens.push_back(identifier());
        while (try_consume(',')) gens.push_back(identifier());
        return gens;
    }

    // word := ('1' | term+) with '*' or whitespace between terms
    FreeWord word(const std::vector<std::string>& gens) {
        std::vector<Syllable> syllables;
        bool saw_term = false;
        for (;;) {
            while (try_consume('*')) {}
            char c = peek();
            if (c == '1' && !saw_term) {
                // identity word; nothing else may follow it
                ++pos_;
                saw_term = true;
                continue;
            }
            if (!ident_start(c)) break;
            std::size_t ident_pos = pos_;
            std::string name = identifier();
            int gen = -1;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i] == name) gen = static_cast<int>(i);
            if (gen < 0) {
                pos_ = ident_pos;
                fail_here("unknown generator '" + name + "'", Errc::UnknownGenerator);
            }
            std::int64_t exp = 1;
            if (try_consume('^')) {
                std::size_t exp_pos = pos_;
                exp = integer();
                if (exp == 0) {
                    pos_ = exp_pos;
                    fail_here("zero exponent", Errc::ZeroExponent);
                }
            }
            syllables.push_back({gen, exp});
            saw_term = true;
        }
        if (!saw_term) fail_here("expected a word");
        return FreeWord::from_syllables(syllables);
    }

    std::vector<FreeWord> relator_list(const std::vector<std::string>& gens) {
        std::vector<FreeWord> relators;
        if (peek() == '>') return relators;
        relators.push_back(relator(gens));
        while (try_consume(',')) relators.push_back(relator(gens));
        return relators;
    }

    FreeWord relator(const std::vector<std::string>& gens) {
        FreeWord lhs = word(gens);
        if (try_consume('=')) {
            FreeWord rhs = word(gens);
            return lhs * rhs.inverse();
        }
        return lhs;
    }
};

} // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).run(); }

std::string to_text(const Presentation& p) {
    std::string out = "<";
    for (int i = 0; i < p.num_generators(); ++i) {
        if (i) out += ", ";
        out += p.generator_names()[static_cast<std::size_t>(i)];
    }
    out += " | ";
    for (int j = 0; j < p.num_relators(); ++j) {
        if (j) out += ", ";
        out += to_string(p.relator(j), p.generator_names());
    }
    out += ">";
    return out;
}

} // namespace novb
