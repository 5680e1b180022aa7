#pragma once

#include <stdexcept>
#include <string>

namespace balance {

// Error classes. Each maps to a distinct CLI exit code.

/// Shapes of strategy matrix, mask and spec disagree.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested construction does not fit (e.g. too many coins for the rounds).
class CapacityError : public std::invalid_argument {
public:
    explicit CapacityError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside a function's mathematical domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed text input; line and column are 1-based (0 when not applicable).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::invalid_argument(format(what, line, column)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line <= 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    int line_;
    int column_;
};

}  // namespace balance
