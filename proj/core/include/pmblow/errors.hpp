#pragma once

#include <stdexcept>
#include <string>

namespace pmb {

/// Base for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyProbe : Error {
    EmptyProbe() : Error("probe set is empty") {}
};

struct OutOfRange : Error {
    using Error::Error;
};

struct Eq2Violated : Error {
    using Error::Error;
};

/// A parameter search could not satisfy its inequality system.
struct Infeasible : Error {
    using Error::Error;
};

/// Residual certification refused because the parameters fail their checker.
struct ConditionNotVerified : Error {
    using Error::Error;
};

/// Evaluation outside a family's time domain (e.g. Sub family at t >= T).
struct DomainError : Error {
    using Error::Error;
};

struct StabilityViolation : Error {
    using Error::Error;
};

struct InvalidInitialData : Error {
    using Error::Error;
};

struct OrderingViolatedAtStart : Error {
    using Error::Error;
};

struct LinkViolated : Error {
    using Error::Error;
};

struct MissingData : Error {
    using Error::Error;
};

} // namespace pmb
