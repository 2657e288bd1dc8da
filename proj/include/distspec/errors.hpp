#ifndef DISTSPEC_ERRORS_HPP
#define DISTSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace distspec {

// Input text could not be decoded (bad graph6 byte, wrong length, ...).
// CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside the operation's domain (disconnected
// graph, infeasible SRG parameters, v not 1 mod 4, ...).  CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds the supported range (order > 258047, exhaustive search
// beyond n = 8, ...).  CLI exit code 3.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace distspec

#endif
