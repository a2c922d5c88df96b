#ifndef KKLAB_ERRORS_HPP
#define KKLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kklab {

enum class Errc {
    CompositeP,
    SizeExceeded,
    DegreeMismatch,
    NotSubfield,
    NotGenerator,
    ZeroArgument,
    ArityMismatch,
    InhomogeneousReplacement,
    ZeroPolynomial,
    InvalidParams,
    HypothesisViolated,
    InsufficientPrecision,
    NotPrincipalUnit,
    ZeroEntry,
    UnknownValuation,
    NotConstantExtension,
    ZeroFunction,
    IsPthPower,
    UnknownSuite,
    ConfigInvalid,
    FieldMismatch,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

// const char* overloads keep success paths free of string temporaries; the
// message is only materialized on failure.
[[noreturn]] void fail_cstr(Errc code, const char* what);

inline void require(bool cond, Errc code, const char* what) {
    if (!cond) fail_cstr(code, what);
}

} // namespace kklab

#endif
