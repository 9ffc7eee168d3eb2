#pragma once

#include <stdexcept>
#include <string>

namespace pe {

// Base for violated mathematical preconditions.  The CLI maps these to
// exit code 3; schema/parse problems use SchemaError (exit code 2).
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// exact-series
struct DivisionByZeroSeries : MathError { using MathError::MathError; };
struct CompositionDomain : MathError { using MathError::MathError; };
struct NotReversible : MathError { using MathError::MathError; };
struct ElementaryDomain : MathError { using MathError::MathError; };
struct PoleInParameters : MathError { using MathError::MathError; };
struct IncompatibleExponents : MathError { using MathError::MathError; };

// diffop
struct UnsupportedSubstitution : MathError { using MathError::MathError; };
struct WrongOrder : MathError { using MathError::MathError; };
struct NonRationalGauge : MathError { using MathError::MathError; };

// frobenius
struct IrregularSingular : MathError { using MathError::MathError; };
struct IrrationalRoots : MathError { using MathError::MathError; };
struct ResonantIntegerGap : MathError { using MathError::MathError; };
struct NoLogStructure : MathError { using MathError::MathError; };

// mirror
struct NonClosedForm : MathError { using MathError::MathError; };
struct NonzeroConstantMismatch : MathError { using MathError::MathError; };
struct DivergentTail : MathError { using MathError::MathError; };
struct DegeneratePotential : MathError { using MathError::MathError; };

// continuation
struct PathTooCloseToSingularity : MathError { using MathError::MathError; };
struct PrecisionExhausted : MathError { using MathError::MathError; };
struct NoOrbifoldPoint : MathError { using MathError::MathError; };

// toric2d
struct NotReflexive : MathError { using MathError::MathError; };
struct RaysMismatch : MathError { using MathError::MathError; };
struct InvalidPolytope : MathError { using MathError::MathError; };

}  // namespace pe
