#pragma once
#include <stdexcept>
#include <string>

namespace acmforge {

// Status codes surfaced through the C API / CLI exit codes.
enum class Status : int {
    ok = 0,
    usage = 2,      // parse or precondition failure
    invariant = 3,  // an internal mathematical invariant failed to hold
    retries = 4,    // randomized search exhausted its retry budget
};

struct ForgeError : std::runtime_error {
    explicit ForgeError(const std::string& msg) : std::runtime_error(msg) {}
    virtual Status status() const { return Status::invariant; }
};

struct ParseError : ForgeError {
    explicit ParseError(const std::string& msg) : ForgeError("parse error: " + msg) {}
    Status status() const override { return Status::usage; }
};

struct PreconditionError : ForgeError {
    explicit PreconditionError(const std::string& msg) : ForgeError("precondition: " + msg) {}
    Status status() const override { return Status::usage; }
};

// Thrown when a certified property fails to verify. Never downgraded to a warning.
struct InvariantViolation : ForgeError {
    explicit InvariantViolation(const std::string& msg) : ForgeError("invariant violation: " + msg) {}
    Status status() const override { return Status::invariant; }
};

struct RetryExhausted : ForgeError {
    explicit RetryExhausted(const std::string& msg) : ForgeError("retries exhausted: " + msg) {}
    Status status() const override { return Status::retries; }
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InvariantViolation(msg);
}

}  // namespace acmforge
