#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causalpanel {

inline constexpr const char* kLabelName = "__label__";

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input file could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DuplicateKeyError : public Error {
public:
    using Error::Error;
};

// A value outside its documented domain (bad threshold, label not in {0,1}, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A series or indicator too degenerate to analyze (constant, all-missing, ...).
class DegenerateError : public Error {
public:
    using Error::Error;
};

class CollinearError : public Error {
public:
    using Error::Error;
};

class SampleSizeError : public Error {
public:
    using Error::Error;
};

// A stage was fed the wrong artifact kind.
class StageMismatchError : public Error {
public:
    using Error::Error;
};

// VAR coefficient spectrum is explosive.
class StabilityError : public Error {
public:
    using Error::Error;
};

class UnknownIdError : public Error {
public:
    using Error::Error;
};

}  // namespace causalpanel
