#pragma once
// Exception taxonomy shared by all modules. Every failure the engine can
// diagnose maps to one of these, so callers (tests, CLI) can distinguish
// user errors from internal invariant violations.

#include <stdexcept>
#include <string>

namespace toprec {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by zero and friends in exact arithmetic.
struct arithmetic_error : error {
    using error::error;
};

// A series did not carry enough certified coefficients for the request.
struct truncation_error : error {
    using error::error;
};

// Expansion attempted around a point where the expression has a pole.
struct pole_error : error {
    using error::error;
};

// An input violates a documented normalization precondition.
struct normalization_error : error {
    using error::error;
};

// Arguments outside the mathematical domain of an operation.
struct domain_error : error {
    using error::error;
};

// An internal structural invariant failed; indicates a bug or corrupted data.
struct consistency_error : error {
    using error::error;
};

// A computation needs a table that is not available and cannot be built here.
struct dependency_error : error {
    using error::error;
};

// Cache or report file problems.
struct io_error : error {
    using error::error;
};

// Always-on invariant check (independent of NDEBUG). The invariants guarded
// by this macro are part of the engine's correctness contract, not debugging
// aids, so they stay active in release builds.
#define TOPREC_CHECK(cond, msg)                                               \
    do {                                                                      \
        if (!(cond)) throw ::toprec::consistency_error(msg);                  \
    } while (0)

} // namespace toprec
