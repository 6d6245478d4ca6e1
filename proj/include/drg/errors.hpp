#pragma once

#include <stdexcept>
#include <string>

namespace drg {

// Error taxonomy aligned with the CLI exit codes: parse problems exit 1,
// semantic validation failures exit 2, numerical failures exit 3.
// Oracle disagreement is reported through verify output, not thrown.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

} // namespace drg
