#pragma once

#include <stdexcept>
#include <string>

namespace burniat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text: words, sign strings, scenario files.
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input that violates a mathematical precondition.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace burniat
