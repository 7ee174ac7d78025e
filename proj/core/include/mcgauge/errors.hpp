/// @file errors.hpp
/// Error taxonomy for the mcgauge engine. Precondition violations and
/// internal-consistency failures are reported through these exception types;
/// the CLI maps them onto its exit-code contract (invalid input vs internal
/// failure).

#pragma once

#include <stdexcept>
#include <string>

namespace mcgauge {

/// Base class: any error raised by the engine.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid-input family: the caller handed us something malformed or the
/// requested computation is not adequately posed (e.g. the polynomial cap
/// is too small). Mapped to CLI exit 3.
struct InputError : EngineError {
    using EngineError::EngineError;
};

/// Internal-consistency family: an identity the mathematics guarantees
/// failed to hold. Indicates a bug (sign/convention or logic), never
/// expected on valid inputs. Mapped to CLI exit 4.
struct InternalError : EngineError {
    using EngineError::EngineError;
};

struct SpaceMismatch : InputError {
    SpaceMismatch() : InputError("ambient space models differ") {}
};

struct JetOrderMismatch : InputError {
    JetOrderMismatch() : InputError("jet orders differ") {}
};

struct IndexOutOfRange : InputError {
    explicit IndexOutOfRange(const std::string& what) : InputError(what) {}
};

struct NotTangent : InputError {
    NotTangent() : InputError("multivector is not tangent to P") {}
};

struct NotGaugeElement : InputError {
    explicit NotGaugeElement(const std::string& what) : InputError(what) {}
};

/// The differential maps a capped basis element outside the x-degree cap;
/// the cap is not invariant. Raise the cap (or use p = 0).
struct XDegreeOverflow : InputError {
    explicit XDegreeOverflow(const std::string& what) : InputError(what) {}
};

/// Composed differentials are not zero: the assembled data is not a complex.
struct NotAComplex : InternalError {
    explicit NotAComplex(const std::string& what) : InternalError(what) {}
};

/// A term of the argument sits below the requested symmetric power.
struct LevelTooLow : InputError {
    explicit LevelTooLow(const std::string& what) : InputError(what) {}
};

/// The two Maurer-Cartan elements have different first jets along P.
struct JetMismatch : InputError {
    JetMismatch() : InputError("first jets along P differ (difference not in F_1)") {}
};

/// A convergence estimate of the iteration failed; sign/convention bug.
struct EstimateViolated : InternalError {
    explicit EstimateViolated(const std::string& what) : InternalError(what) {}
};

}  // namespace mcgauge
