#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtv {

// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- group-spec validation -------------------------------------------------

struct SpecError : Error {
    using Error::Error;
};

// gcd(d, alpha_0, ..., alpha_n) != 1: the group would not act faithfully of
// order d, and all downstream counts would silently describe a smaller group.
struct GcdViolation : SpecError {
    using SpecError::SpecError;
};

// All residues equal: the action is a scalar twist and the invariant theory
// degenerates to a plain Veronese, which this toolkit deliberately excludes.
struct DegenerateSpec : SpecError {
    using SpecError::SpecError;
};

// Fewer than three coordinates (n < 2) or group order too small (d <= n).
struct DimensionTooSmall : SpecError {
    using SpecError::SpecError;
};

// --- operation errors -------------------------------------------------------

// Exponent vectors of different lengths fed to a comparison.
struct LengthMismatch : Error {
    using Error::Error;
};

// A monomial passed to factor_invariant is not an invariant of the stated
// degree, so no factorization exists.
struct NotInvariant : Error {
    using Error::Error;
};

// No zero-sum subsequence exists (only possible when the input sequence is
// shorter than the 2d-1 guarantee threshold).
struct NotFound : Error {
    using Error::Error;
};

// The requested cohomology data is only defined for level rings whose
// canonical module is generated by the full-support degree-d invariants.
struct NotLevelGt : Error {
    using Error::Error;
};

// An enumeration would exceed the configured work cap. Carries the estimate
// that tripped the bound so callers can report or raise the cap.
struct ResourceBound : Error {
    ResourceBound(const std::string& what, std::uint64_t estimated_work, std::uint64_t cap)
        : Error(what), estimated(estimated_work), limit(cap) {}
    std::uint64_t estimated;
    std::uint64_t limit;
};

// A quantity that must be an integer (e.g. the rational term in the h^{n-1}
// cohomology formula) failed its exactness assertion. Never expected; would
// indicate a transcription bug in the closed formulas.
struct IntegralityViolation : Error {
    using Error::Error;
};

}  // namespace gtv
