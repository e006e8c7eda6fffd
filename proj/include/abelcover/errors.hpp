#pragma once

#include <stdexcept>
#include <string>

namespace abelcover {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lattice vectors of different ranks were combined
struct DimensionMismatch : EngineError {
    using EngineError::EngineError;
};

// a declared cohomology table has no entry for the requested class, or a
// non-nef class on a del Pezzo could not be reduced to a nef one
struct UnresolvableCohomology : EngineError {
    using EngineError::EngineError;
};

// a reduced fundamental relation has no solution in the Picard lattice
struct NonDivisible : EngineError {
    using EngineError::EngineError;
};

// the self-intersection formula for the cover produced a non-integer on
// data that was asserted smooth
struct NonIntegralK2 : EngineError {
    using EngineError::EngineError;
};

// malformed catalog document
struct SchemaError : EngineError {
    using EngineError::EngineError;
};

// bad arguments to an operation (zero inertia element, n out of range, ...)
struct InputError : EngineError {
    using EngineError::EngineError;
};

}  // namespace abelcover
