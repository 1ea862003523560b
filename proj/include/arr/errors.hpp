#pragma once

#include <stdexcept>
#include <string>

namespace arr {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

struct CoincidentLines : Error {
    explicit CoincidentLines(const std::string& msg) : Error(msg) {}
};

struct DegenerateArrangement : Error {
    explicit DegenerateArrangement(const std::string& msg) : Error(msg) {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& msg) : Error(msg) {}
};

struct NotFound : Error {
    explicit NotFound(const std::string& msg) : Error(msg) {}
};

struct FrameNotFound : Error {
    explicit FrameNotFound(const std::string& msg) : Error(msg) {}
};

struct TooManyParameters : Error {
    explicit TooManyParameters(const std::string& msg) : Error(msg) {}
};

struct NoRealEmbedding : Error {
    explicit NoRealEmbedding(const std::string& msg) : Error(msg) {}
};

// Parse failures carry a position for diagnostics.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace arr
