#pragma once

#include <stdexcept>
#include <string>

namespace dpart {

/// Base of all domain failures raised by the library. Precondition
/// violations (bad ranges, malformed input) use std::invalid_argument.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cyclotomic value expected to be rational kept an irrational component.
class NotRational : public Error {
public:
    using Error::Error;
};

/// A wave index j that divides none of the allowed parts.
class NotDivisor : public Error {
public:
    using Error::Error;
};

/// A product value that is not an exact power of the base d.
class NotPowerOfD : public Error {
public:
    using Error::Error;
};

/// Product data that cannot come from any d-ary partition.
class InconsistentData : public Error {
public:
    using Error::Error;
};

/// A computed object disagrees with the enumeration oracle.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

} // namespace dpart
