#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planar {

// Malformed tree or series text. position is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A configured size cap (enumeration degree, oracle leaf count) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace planar
