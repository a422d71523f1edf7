#ifndef NAMBU_ERRORS_HPP
#define NAMBU_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nambu {

// Malformed textual input (polynomials, tensors, matrices).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t column)
        : std::runtime_error(msg), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// A mathematical precondition of an operation does not hold
// (dependent generators, wrong codimension, f(0) != 0, ...).
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace nambu

#endif
