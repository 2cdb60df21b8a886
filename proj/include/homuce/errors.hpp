#pragma once

#include <stdexcept>
#include <string>

namespace homuce {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotInSubspace : public Error {
public:
    using Error::Error;
};

class NotEndomorphism : public Error {
public:
    NotEndomorphism(const std::string& what, std::size_t i, std::size_t j)
        : Error(what), i_(i), j_(j) {}
    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }

private:
    std::size_t i_, j_;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class NotHomLie : public Error {
public:
    using Error::Error;
};

class AxiomViolation : public Error {
public:
    using Error::Error;
};

class DegreeCapExceeded : public Error {
public:
    using Error::Error;
};

class NotSurjective : public Error {
public:
    using Error::Error;
};

class NotAHomomorphism : public Error {
public:
    using Error::Error;
};

class CompositionMismatch : public Error {
public:
    using Error::Error;
};

class BracketNotWellDefined : public Error {
public:
    using Error::Error;
};

class LiftIllDefined : public Error {
public:
    using Error::Error;
};

class NotOverSameBase : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& expected, int line, int column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": expected " + expected),
          line_(line), column_(column), expected_(expected) {}
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_, column_;
    std::string expected_;
};

class UnknownLabel : public Error {
public:
    UnknownLabel(const std::string& label, int line = 0, int column = 0)
        : Error("unknown label '" + label + "'" +
                (line > 0 ? " at " + std::to_string(line) + ":" + std::to_string(column) : "")),
          label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

}  // namespace homuce
