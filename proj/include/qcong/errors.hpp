#ifndef QCONG_ERRORS_HPP
#define QCONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcong {

/// Base class for all failures raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what = "division by zero rational function")
        : Error(what) {}
};

/// Raised by poly_crt when the moduli are not coprime.
struct CoprimalityError : Error {
    explicit CoprimalityError(const std::string& what) : Error(what) {}
};

/// A lower series parameter made a term denominator identically zero.
struct ZeroTermDenominator : Error {
    ZeroTermDenominator(const std::string& what, unsigned term_index)
        : Error(what), term(term_index) {}
    unsigned term;
};

/// Parameter values outside the domain of a closed form (e.g. a = b in a
/// formula carrying 1/(a-b)).
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& what) : Error(what) {}
};

/// Instance does not satisfy the residue-class requirement of a claim.
struct WrongResidueClass : Error {
    explicit WrongResidueClass(const std::string& what) : Error(what) {}
};

/// Rejection sampling failed to find an admissible point within the cap.
struct SamplerExhausted : Error {
    explicit SamplerExhausted(const std::string& what) : Error(what) {}
};

/// A rational was mapped into Z/p^k but its denominator is divisible by p.
struct DenominatorDivisibleByP : Error {
    explicit DenominatorDivisibleByP(const std::string& what) : Error(what) {}
};

/// Finite-difference Gamma derivative disagreed across guard levels.
struct UnstableDerivative : Error {
    explicit UnstableDerivative(const std::string& what) : Error(what) {}
};

/// Evaluation point hits a pole of the expression under test.
struct DegenerateEvaluationPoint : Error {
    explicit DegenerateEvaluationPoint(const std::string& what) : Error(what) {}
};

}  // namespace qcong

#endif
