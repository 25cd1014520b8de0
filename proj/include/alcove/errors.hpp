#ifndef ALCOVE_ERRORS_HPP
#define ALCOVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alcove {

// Bad user input: invalid rank, mismatched dimensions, non-coprime residue, ...
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap was exceeded (Weyl order, alcove size, diagram size).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency violation: a computed structure failed a sanity check.
class integrity_error : public std::logic_error {
public:
    explicit integrity_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace alcove

#endif
