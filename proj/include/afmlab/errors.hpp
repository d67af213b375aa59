#pragma once

#include <stdexcept>
#include <string>

namespace afmlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct InvalidEdge : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct ResourceExhausted : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };
struct DivergenceSuspected : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct AsymmetryError : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };

} // namespace afmlab
