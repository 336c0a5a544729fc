#pragma once

#include <stdexcept>
#include <string>

namespace equindex {

// A caller supplied a value outside an operation's domain
// (non-prime modulus, frame size out of range, ...).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Operands that cannot be combined: mismatched presentations, mixed primes.
class structural_error : public std::logic_error {
public:
    explicit structural_error(const std::string& what) : std::logic_error(what) {}
};

// A computation violated one of its own invariants; signals an engine bug,
// never bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace equindex
