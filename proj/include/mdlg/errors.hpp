#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdlg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::vector<std::string> diagnostics)
        : Error(what), diagnostics_(std::move(diagnostics)) { }
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

// Thrown when a language grows past the configured enumeration bound.
class LimitExceeded : public Error {
public:
    LimitExceeded(std::size_t limit, std::size_t partial)
        : Error("enumeration limit " + std::to_string(limit) + " exceeded after "
                + std::to_string(partial) + " sentences"),
          limit_(limit), partial_(partial) { }
    std::size_t limit() const { return limit_; }
    std::size_t partial_count() const { return partial_; }

private:
    std::size_t limit_;
    std::size_t partial_;
};

class CoverageError : public Error {
public:
    CoverageError(const std::string& what, std::vector<std::string> missing)
        : Error(what), missing_(std::move(missing)) { }
    const std::vector<std::string>& missing() const { return missing_; }

private:
    std::vector<std::string> missing_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column = 0)
        : Error("line " + std::to_string(line)
                + (column ? ", column " + std::to_string(column) : std::string())
                + ": " + msg),
          line_(line), column_(column) { }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

} // namespace mdlg
