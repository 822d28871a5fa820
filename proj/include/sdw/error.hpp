#pragma once

#include <stdexcept>
#include <string>

namespace sdw {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be read or written.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Input violates a structural or numerical precondition.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace sdw
