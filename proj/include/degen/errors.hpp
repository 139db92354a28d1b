#ifndef DEGEN_ERRORS_HPP
#define DEGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degen {

// Every library error carries a stable name so callers (notably the CLI)
// can map failures to exit codes without string-matching what().
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& detail) : Error("DomainError", detail) {}

protected:
    DomainError(std::string name, const std::string& detail) : Error(std::move(name), detail) {}
};

class NonTerminatingExact : public DomainError {
public:
    explicit NonTerminatingExact(const std::string& detail)
        : DomainError("NonTerminatingExact", detail) {}
};

class NonTerminating : public DomainError {
public:
    explicit NonTerminating(const std::string& detail) : DomainError("NonTerminating", detail) {}
};

class NonRationalPower : public DomainError {
public:
    explicit NonRationalPower(const std::string& detail)
        : DomainError("NonRationalPower", detail) {}
};

class UnsupportedM : public DomainError {
public:
    explicit UnsupportedM(const std::string& detail) : DomainError("UnsupportedM", detail) {}
};

class LowerParamPole : public DomainError {
public:
    explicit LowerParamPole(const std::string& detail) : DomainError("LowerParamPole", detail) {}
};

class EndpointSingularity : public DomainError {
public:
    explicit EndpointSingularity(const std::string& detail)
        : DomainError("EndpointSingularity", detail) {}
};

class PoleOnPath : public DomainError {
public:
    explicit PoleOnPath(const std::string& detail) : DomainError("PoleOnPath", detail) {}
};

class NonzeroInnerConstant : public DomainError {
public:
    explicit NonzeroInnerConstant(const std::string& detail)
        : DomainError("NonzeroInnerConstant", detail) {}
};

class OrderExceeded : public DomainError {
public:
    explicit OrderExceeded(const std::string& detail) : DomainError("OrderExceeded", detail) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& detail) : Error("NoConvergence", detail) {}
};

} // namespace degen

#endif
