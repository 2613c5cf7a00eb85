#pragma once

#include <stdexcept>
#include <string>

namespace quadstar {

/// Base of every recoverable domain failure. `kind()` is the stable
/// machine-readable tag the CLI prints in its error record.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ZeroDivisor : public DomainError {
public:
    explicit ZeroDivisor(const std::string& what) : DomainError("ZeroDivisor", what) {}
};

class NonRealRoots : public DomainError {
public:
    explicit NonRealRoots(const std::string& what) : DomainError("NonRealRoots", what) {}
};

class PrecisionExhausted : public DomainError {
public:
    explicit PrecisionExhausted(const std::string& what)
        : DomainError("PrecisionExhausted", what) {}
};

class NoSolution : public DomainError {
public:
    explicit NoSolution(const std::string& what) : DomainError("NoSolution", what) {}
};

class InvalidParams : public DomainError {
public:
    explicit InvalidParams(const std::string& what) : DomainError("InvalidParams", what) {}

protected:
    InvalidParams(std::string kind, const std::string& what)
        : DomainError(std::move(kind), what) {}
};

class NonQuadraticDelta : public InvalidParams {
public:
    explicit NonQuadraticDelta(const std::string& what)
        : InvalidParams("NonQuadraticDelta", what) {}
};

}  // namespace quadstar
