#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

// Bad textual input (residue sets, symbol sets, partitions, s-expressions).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeds a configured search bound and allow_slow was not set.
class BoundsError : public std::runtime_error {
public:
    explicit BoundsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace circulant
