#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

// Base of every error raised by the library. Mathematical verdicts
// (unsolvable, nonexistent group inverse) are return values, never errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-conformable operands, out-of-range block cuts, non-square input
// where a square one is required.
class dimension_error : public error {
public:
    using error::error;
};

// Operands of different scalar modes were combined.
class mode_error : public error {
public:
    using error::error;
};

// A standing hypothesis of a construction does not hold, e.g. a required
// group inverse does not exist.
class hypothesis_violated : public error {
public:
    using error::error;
};

// A supplied certificate (inner inverse, witness) fails its defining identity.
class certificate_invalid : public error {
public:
    certificate_invalid(const std::string& what, std::string identity)
        : error(what), identity_(std::move(identity)) {}

    const std::string& identity() const noexcept { return identity_; }

private:
    std::string identity_;
};

// A caller-supplied matrix was claimed to solve an equation and does not.
class solution_rejected : public error {
public:
    using error::error;
};

// An identity that must hold by construction failed. Never expected to fire.
class internal_inconsistency : public error {
public:
    using error::error;
};

// Malformed input file or JSON document.
class parse_error : public error {
public:
    using error::error;
};

} // namespace ginv
