#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Error taxonomy shared by all modules. The CLI maps these to exit codes:
// parse -> 2, domain/geometry/dimension -> 3, budget -> 4, internal -> 5.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line = 0, std::size_t col = 0)
        : Error(what + (line ? " at line " + std::to_string(line) +
                               ", column " + std::to_string(col)
                             : std::string())),
          line(line), col(col) {}
    std::size_t line, col;
};

struct DimensionError : Error { using Error::Error; };
struct GeometryError  : Error { using Error::Error; };
struct DomainError    : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };

// Resource budget exceeded; carries the last fully completed step.
struct BudgetError : Error {
    BudgetError(const std::string& what, long completed)
        : Error(what), completed(completed) {}
    long completed;
};

struct InternalError : Error { using Error::Error; };

} // namespace cremona
