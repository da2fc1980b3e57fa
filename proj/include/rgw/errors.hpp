#pragma once

#include <stdexcept>

namespace rgw {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct InvalidInstance : Error { using Error::Error; };
struct InvalidDigraph : Error { using Error::Error; };
struct InvalidMatroid : Error { using Error::Error; };
struct AvoidVertexHasRepeatedColour : Error { using Error::Error; };
struct NTooSmall : Error { using Error::Error; };
struct NOddOrTooSmall : Error { using Error::Error; };
struct IsolatedOutVertex : Error { using Error::Error; };
struct NotPEC : Error { using Error::Error; };
struct EdgeNotFromReduction : Error { using Error::Error; };
struct TooLargeForEnumeration : Error { using Error::Error; };
struct NTooLargeForExhaustive : Error { using Error::Error; };
struct InfeasibleEdgeCount : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct HypothesesNotMet : Error { using Error::Error; };
struct UnknownFamily : Error { using Error::Error; };

}  // namespace rgw
