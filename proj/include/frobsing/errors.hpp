#ifndef FROBSING_ERRORS_HPP
#define FROBSING_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobsing {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent or size limits exceeded (entries are capped below 2^31).
class SizingError : public Error {
public:
    explicit SizingError(const std::string& what) : Error(what) {}
};

/// A configured effort budget was exceeded; carries what would be required.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, std::uint64_t required, std::uint64_t limit)
        : Error(what + " (required " + std::to_string(required) + ", limit "
                + std::to_string(limit) + ")"),
          required_(required),
          limit_(limit) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

/// Text input rejected; position is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace frobsing

#endif
