#pragma once

#include <stdexcept>
#include <string>

namespace msae {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument values (negative lengths, out-of-range parameters, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain: " + msg) {}
};

/// Invalid configuration (divisibility rules, degenerate bands, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

/// Mismatched shapes or inconsistent companion inputs.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& msg) : Error("consistency: " + msg) {}
};

/// Malformed file contents.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error("format: " + msg) {}
};

/// Recognized file with an encoding the library does not handle.
class UnsupportedFormatError : public Error {
public:
    explicit UnsupportedFormatError(const std::string& msg) : Error("unsupported-format: " + msg) {}
};

/// Filesystem failures.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("io: " + msg) {}
};

} // namespace msae
