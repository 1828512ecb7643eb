#ifndef MINT_ERRORS_HPP
#define MINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mint {

/// Raised for malformed user input (files, CLI values). The CLI maps this
/// to exit code 2; anything else escaping to main is an internal error (1).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mint

#endif
