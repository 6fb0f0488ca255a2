#pragma once

#include <stdexcept>
#include <string>

namespace lexfreq {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A file that should exist does not, or cannot be opened.
/// The CLI maps this to exit code 2 (usage error).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Input content is malformed: bad UTF-8, bad TSV, inconsistent
/// annotations, out-of-range requests. The CLI maps this to exit code 1.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

}  // namespace lexfreq
