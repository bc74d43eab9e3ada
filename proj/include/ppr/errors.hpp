#pragma once

#include <stdexcept>
#include <string>

namespace ppr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositeModulus : Error {
    using Error::Error;
};

struct ZeroInverse : Error {
    using Error::Error;
};

struct SubsetTooLarge : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidTarget : Error {
    using Error::Error;
};

struct InvalidCount : Error {
    using Error::Error;
};

} // namespace ppr
