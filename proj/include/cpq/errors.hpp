#pragma once

#include <stdexcept>
#include <string>

namespace cpq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CPQ_DEFINE_ERROR(Name)               \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    };

CPQ_DEFINE_ERROR(DivisionByZero)
CPQ_DEFINE_ERROR(NonVanishingAtOne)
CPQ_DEFINE_ERROR(PoleAtSample)
CPQ_DEFINE_ERROR(OrientationFailure)
CPQ_DEFINE_ERROR(NonTerminating)
CPQ_DEFINE_ERROR(UngovernedPair)
CPQ_DEFINE_ERROR(UnsupportedGenerator)
CPQ_DEFINE_ERROR(CertificateViolation)
CPQ_DEFINE_ERROR(NonUnitCoefficient)
CPQ_DEFINE_ERROR(PreconditionViolated)
CPQ_DEFINE_ERROR(DegenerateTopForm)
CPQ_DEFINE_ERROR(Divergent)
CPQ_DEFINE_ERROR(DegenerateConfiguration)
CPQ_DEFINE_ERROR(UnknownSuite)
CPQ_DEFINE_ERROR(UnknownGenerator)
CPQ_DEFINE_ERROR(IndexOutOfRange)

#undef CPQ_DEFINE_ERROR

/// Parse failure with the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// A replayed derivation step that did not verify.
class StepFailure : public Error {
public:
    StepFailure(int step, const std::string& what)
        : Error("step " + std::to_string(step) + ": " + what), step(step) {}
    int step;
};

}  // namespace cpq
