#pragma once

#include <stdexcept>
#include <string>

namespace quandlink {

// Input text could not be parsed. line/column are 1-based; 0 means unknown
// (e.g. when a code is assembled in memory rather than read from text).
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int line = 0, int column = 0)
        : std::runtime_error(format(message, line, column)), line(line), column(column) {}

    int line;
    int column;

private:
    static std::string format(const std::string& message, int line, int column) {
        if (line <= 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }
};

// Thrown by the exhaustive counting engine when |T|^arcs exceeds its budget.
struct OracleBudgetExceeded : std::runtime_error {
    OracleBudgetExceeded(double required, double budget)
        : std::runtime_error("oracle budget exceeded: " + std::to_string(required) +
                             " assignments needed, budget is " + std::to_string(budget)),
          required(required), budget(budget) {}

    double required;
    double budget;
};

} // namespace quandlink
