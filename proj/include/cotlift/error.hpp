#ifndef COTLIFT_ERROR_HPP
#define COTLIFT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cotlift {

// Malformed user input: bad expression text, symmetry violations, missing
// manifest blocks, dimension overflow. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Parse failure with position information (0-based offset into the text,
// 1-based line/column for display).
class parse_error : public input_error {
public:
    parse_error(std::string msg, int line, int column)
        : input_error(msg + " (line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Violated internal invariant. Not part of the user-facing contract.
class internal_error : public std::logic_error {
public:
    explicit internal_error(std::string msg) : std::logic_error(std::move(msg)) {}
};

} // namespace cotlift

#endif
