#pragma once

#include <stdexcept>
#include <string>

namespace rht {

// Misuse of the library API: mixing elements from different ambient
// algebras, applying a derivation that is undefined on a generator, ...
class structural_error : public std::logic_error {
public:
    explicit structural_error(const std::string& msg) : std::logic_error(msg) {}
};

// Invalid user-supplied data: malformed polynomials, schema violations,
// weight vectors of the wrong length, failed preconditions on inputs.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that the toolkit deliberately does not handle
// (degree-1 generators, embeddings outside the catalogue, ...).
class unsupported_error : public validation_error {
public:
    explicit unsupported_error(const std::string& msg) : validation_error(msg) {}
};

} // namespace rht
