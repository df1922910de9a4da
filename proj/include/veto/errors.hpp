#ifndef VETO_ERRORS_HPP
#define VETO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace veto {

// Malformed profile text. The message always names the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Raised when an input would push intermediate values past the 64-bit
// guarantees documented in the README. Never a wrong answer.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace veto

#endif
