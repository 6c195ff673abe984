#pragma once

#include <stdexcept>
#include <string>

namespace ptau {

/// Base class of all library failures that the CLI reports verbatim.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PTAU_DEFINE_ERROR(Name)                              \
    class Name : public Error {                              \
    public:                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// series / symbolic
PTAU_DEFINE_ERROR(ResonanceViolation);
PTAU_DEFINE_ERROR(SymmetryViolation);
PTAU_DEFINE_ERROR(NonIntegral);
// analytic
PTAU_DEFINE_ERROR(NearZeroDivide);
PTAU_DEFINE_ERROR(WrongRegime);
// roots
PTAU_DEFINE_ERROR(NoConvergence);
PTAU_DEFINE_ERROR(OrbitIncomplete);
// continuation
PTAU_DEFINE_ERROR(NotAZero);
PTAU_DEFINE_ERROR(DegenerateZero);

#undef PTAU_DEFINE_ERROR

}  // namespace ptau
