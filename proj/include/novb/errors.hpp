#ifndef NOVB_ERRORS_HPP
#define NOVB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace novb {

// Every failure the library can report.  Input-shaped problems map to CLI
// exit code 2, resource caps to exit code 3.
enum class Errc {
    // presentation / character input
    UnknownGenerator,
    ZeroExponent,
    SyntaxError,
    RelatorNonvanishing,
    ZeroClass,
    DependentRows,
    // chain-complex ingestion
    ShapeMismatch,
    BoundarySquareNonzero,
    MalformedTerm,
    // laurent algebra
    RankMismatch,
    SizeExceeded,
    AllZero,
    ZeroElement,
    ExponentOverflow,
    // novikov / certify
    RankTooHigh,
    ZeroCoordinate,
    NoClass,
    // cli
    BadJob,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

    // Resource caps are the only class of failure that is not the caller's
    // input being wrong.
    bool is_resource_limit() const {
        return code_ == Errc::SizeExceeded || code_ == Errc::ExponentOverflow;
    }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace novb

#endif
