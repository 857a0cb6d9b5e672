#pragma once

#include <stdexcept>
#include <string>

namespace ecci {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph construction and parsing.
struct SelfLoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct VertexOutOfRangeError : Error { using Error::Error; };
struct NonpositiveWeightError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Violated preconditions.
struct DisconnectedError : Error { using Error::Error; };
struct NotATreeError : Error { using Error::Error; };
struct NotUnicyclicError : Error { using Error::Error; };
struct TooSmallError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct OutOfRangeError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

// Family constructors, transformations, verification suites.
struct BadParamsError : Error { using Error::Error; };
struct NoClosedFormError : Error { using Error::Error; };
struct BadConfigError : Error { using Error::Error; };
struct NotApplicableError : Error { using Error::Error; };
struct NoEligiblePairError : Error { using Error::Error; };
struct UnknownSuiteError : Error { using Error::Error; };

} // namespace ecci
