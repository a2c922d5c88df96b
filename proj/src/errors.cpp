#include "kklab/errors.hpp"

namespace kklab {

void fail_cstr(Errc code, const char* what) { throw Error(code, std::string(what)); }

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotSubfield: return "NotSubfield";
    case Errc::NotGenerator: return "NotGenerator";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::InhomogeneousReplacement: return "InhomogeneousReplacement";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::NotPrincipalUnit: return "NotPrincipalUnit";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::UnknownValuation: return "UnknownValuation";
    case Errc::NotConstantExtension: return "NotConstantExtension";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::IsPthPower: return "IsPthPower";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::Internal: return "Internal";
    }
    return "UnknownError";
}

} // namespace kklab
