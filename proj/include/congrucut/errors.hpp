#pragma once

#include <stdexcept>
#include <string>

namespace congrucut {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRegion : Error {
    using Error::Error;
};

struct TrimTooLarge : Error {
    using Error::Error;
};

struct SearchFailed : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace congrucut
