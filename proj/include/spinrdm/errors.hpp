#pragma once

#include <stdexcept>
#include <string>

namespace spinrdm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitDeterminant : Error { using Error::Error; };
struct NonUnitAxis : Error { using Error::Error; };
struct SuperluminalVelocity : Error { using Error::Error; };
struct MassMismatch : Error { using Error::Error; };
struct NotInLittleGroup : Error { using Error::Error; };
struct EmptyState : Error { using Error::Error; };
struct ZeroNorm : Error { using Error::Error; };
struct DuplicateMomentum : Error { using Error::Error; };
struct WrongBasis : Error { using Error::Error; };
struct SetMismatch : Error { using Error::Error; };
struct DegenerateRotation : Error { using Error::Error; };
struct OutOfPlane : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Structural tolerances. Single matrix operations are good to machine
// precision; composed pipelines accumulate a couple of digits.
inline constexpr double kTolSingle = 1e-12;
inline constexpr double kTolComposed = 1e-10;
// Two momenta closer than this (componentwise) are the same grid point.
inline constexpr double kMomentumQuantum = 1e-9;

} // namespace spinrdm
