#ifndef CARLITZLAB_ERRORS_HPP
#define CARLITZLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carlitzlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecMismatch : Error { using Error::Error; };
struct DivByZero : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };
struct NotAMultiple : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct NotNested : Error { using Error::Error; };
struct HypothesisNotMet : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct WrongOrders : Error { using Error::Error; };
struct NotInL : Error { using Error::Error; };
struct DegreeNotOne : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace carlitzlab

#endif
