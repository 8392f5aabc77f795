#ifndef APOLAR_ERRORS_HPP
#define APOLAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

// Exit-code contract of the CLI: 1 for domain failures (the input is
// well-formed but outside what the algorithms handle), 2 for usage and
// parse failures.
class Error : public std::runtime_error {
public:
    int exit_code() const { return exit_code_; }

protected:
    Error(const std::string& msg, int exit_code)
        : std::runtime_error(msg), exit_code_(exit_code) {}

private:
    int exit_code_;
};

class UsageError : public Error {
protected:
    explicit UsageError(const std::string& msg) : Error(msg, 2) {}
};

class DomainError : public Error {
protected:
    explicit DomainError(const std::string& msg) : Error(msg, 1) {}
};

class SyntaxError : public UsageError {
public:
    // position is a 1-based column offset into the offending text;
    // line is 0 unless the text came from a file.
    SyntaxError(const std::string& msg, std::size_t position, std::size_t line = 0)
        : UsageError(render(msg, position, line)), position_(position), line_(line) {}

    std::size_t position() const { return position_; }
    std::size_t line() const { return line_; }

private:
    static std::string render(const std::string& msg, std::size_t position, std::size_t line) {
        std::string where = line ? "line " + std::to_string(line) + ", column " + std::to_string(position)
                                 : "column " + std::to_string(position);
        return "syntax error at " + where + ": " + msg;
    }

    std::size_t position_;
    std::size_t line_;
};

class UnknownVariable : public UsageError {
public:
    UnknownVariable(const std::string& name, std::size_t position)
        : UsageError("unknown variable '" + name + "' at column " + std::to_string(position)),
          name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class ArityMismatch : public UsageError {
public:
    explicit ArityMismatch(const std::string& msg) : UsageError("arity mismatch: " + msg) {}
};

class ShapeMismatch : public UsageError {
public:
    explicit ShapeMismatch(const std::string& msg) : UsageError("shape mismatch: " + msg) {}
};

class ZeroPolynomial : public UsageError {
public:
    explicit ZeroPolynomial(const std::string& msg) : UsageError("zero polynomial: " + msg) {}
};

class WrongArity : public UsageError {
public:
    explicit WrongArity(const std::string& msg) : UsageError(msg) {}
};

class IoError : public UsageError {
public:
    explicit IoError(const std::string& msg) : UsageError(msg) {}
};

class NonIsolatedPoint : public DomainError {
public:
    explicit NonIsolatedPoint(const std::string& point)
        : DomainError("point " + point +
                      " is not isolated: dual-space dimension still grows at the degree cap") {}
};

class NotZeroDimensional : public DomainError {
public:
    explicit NotZeroDimensional(const std::string& msg)
        : DomainError("ideal is not zero-dimensional: " + msg) {}
};

class IrrationalRoots : public DomainError {
public:
    explicit IrrationalRoots(const std::string& details)
        : DomainError("system has roots outside the rationals: " + details) {}
};

class NotVanishing : public DomainError {
public:
    explicit NotVanishing(const std::string& point)
        : DomainError("polynomial does not vanish at the common zero " + point) {}
};

class BoundViolation : public DomainError {
public:
    explicit BoundViolation(const std::string& msg) : DomainError(msg) {}
};

class InvalidRoot : public DomainError {
public:
    explicit InvalidRoot(const std::string& point)
        : DomainError("supplied point " + point + " is not a common zero of the system") {}
};

}  // namespace apolar

#endif
