#ifndef MVI_ERRORS_HPP
#define MVI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mvi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// finite_field
struct NotPrimePower : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// graph
struct InvalidPartition : Error { using Error::Error; };
struct NotAnEdge : Error { using Error::Error; };

// polyring
struct LengthMismatch : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };

// generators
struct InvalidConfig : Error { using Error::Error; };
struct InsufficientWeight : Error { using Error::Error; };
struct NotAdjacent : Error { using Error::Error; };
struct TooFewEdges : Error { using Error::Error; };
struct NoSwappableEdge : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

// groebner
struct NotHomogeneous : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };

}  // namespace mvi

#endif
