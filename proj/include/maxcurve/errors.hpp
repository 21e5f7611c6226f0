#ifndef MAXCURVE_ERRORS_HPP
#define MAXCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxcurve {

// Base for every error thrown by this library. Callers that only need
// pass/fail can catch this; tests and the CLI distinguish the subclasses.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrime : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct MixedFields : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct BadParameters : Error {
    using Error::Error;
};
// Characteristic divides n^2-n+1 (Hurwitz) or n^2-nl+l^2 (generalized).
struct CharacteristicDividesQ : Error {
    using Error::Error;
};
// Characteristic divides the Fermat degree m.
struct CharacteristicDividesM : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};
struct EvenOrNonPrimeModulus : Error {
    using Error::Error;
};
struct GcdNotOne : Error {
    using Error::Error;
};
struct NegativeDiscriminant : Error {
    using Error::Error;
};
struct NotApplicable : Error {
    using Error::Error;
};
struct NoGenusFormula : Error {
    using Error::Error;
};
struct UndefinedAtPoint : Error {
    using Error::Error;
};
struct DivisibilityFails : Error {
    using Error::Error;
};
struct IncompatibleParameters : Error {
    using Error::Error;
};

} // namespace maxcurve

#endif
