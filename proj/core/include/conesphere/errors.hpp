#pragma once

#include <stdexcept>
#include <string>

namespace conesphere {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// invalid-input family
struct MalformedGluing : Error { using Error::Error; };
struct NonSpherical : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct NotCombinatoriallyPositive : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct InvalidMultiList : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct DegenerateModuli : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// internal invariant violations; must be impossible on valid inputs
struct NotAUnit : Error { using Error::Error; };
struct InternalInvariant : Error { using Error::Error; };

}  // namespace conesphere
