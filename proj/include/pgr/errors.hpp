#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgr {

// Base of every library error. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arity, range and structural precondition violations (exit code 2).
class DomainError : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public DomainError {
public:
    ArityMismatch(const std::string& what, std::size_t expected, std::size_t got)
        : DomainError(what + ": expected " + std::to_string(expected) + " operands, got " +
                      std::to_string(got)),
          expected_(expected),
          got_(got) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t got() const noexcept { return got_; }

private:
    std::size_t expected_;
    std::size_t got_;
};

class InadmissibleLength : public DomainError {
public:
    using DomainError::DomainError;
};

class QuantizationMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class NotFound : public DomainError {
public:
    using DomainError::DomainError;
};

class NoZero : public DomainError {
public:
    using DomainError::DomainError;
};

class InfiniteUniverse : public DomainError {
public:
    using DomainError::DomainError;
};

class BudgetExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

class KeyRangeError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConfigError : public DomainError {
public:
    using DomainError::DomainError;
};

// Syntax errors in the element language (exit code 1).
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
        : Error(format(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                              const std::string& found) {
        std::string msg = "parse error at offset " + std::to_string(offset) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace pgr
