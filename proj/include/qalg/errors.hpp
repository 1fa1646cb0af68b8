#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct WindowViolation : Error {
    using Error::Error;
};
struct CompositionNonzero : Error {
    using Error::Error;
};
struct SignError : Error {
    using Error::Error;
};
struct InconsistentGrading : Error {
    using Error::Error;
};
struct NotContained : Error {
    using Error::Error;
};
struct WindowTooShort : Error {
    WindowTooShort(const std::string& msg, int degree) : Error(msg), degree(degree) {}
    int degree;
};
struct NotASubmodule : Error {
    using Error::Error;
};
struct NotAnAction : Error {
    using Error::Error;
};
struct NotHomotopic : Error {
    using Error::Error;
};
struct AcyclicityFailure : Error {
    using Error::Error;
};
struct CapReached : Error {
    using Error::Error;
};
struct WindowUnstable : Error {
    using Error::Error;
};

} // namespace qalg
