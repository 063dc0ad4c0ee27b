#pragma once

#include <stdexcept>
#include <string>

namespace symsos {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct DegreeError : Error {
    using Error::Error;
};

struct OrderError : Error {
    using Error::Error;
};

struct GroupTooLargeError : Error {
    using Error::Error;
};

struct UnsupportedGroupError : Error {
    using Error::Error;
};

struct InconsistentIrrepsError : Error {
    using Error::Error;
};

struct BasisExtractionError : Error {
    using Error::Error;
};

struct InvarianceError : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

}  // namespace symsos
