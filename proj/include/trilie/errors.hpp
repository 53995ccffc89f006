#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivisor : public Error {
public:
    ZeroDivisor() : Error("division by the zero polynomial") {}
};

class ExponentOverflow : public Error {
public:
    using Error::Error;
};

/// A basis, pqxz or weight index left the supported range of +-2^40.
class IndexOverflow : public Error {
public:
    using Error::Error;
};

class WindowTooSmall : public Error {
public:
    using Error::Error;
};

class NotEigenvector : public Error {
public:
    using Error::Error;
};

/// Raised when an induced action is requested from a triple action that
/// fails the 3-Lie module axioms.
class NotAModule : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace trilie
