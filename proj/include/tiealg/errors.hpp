#pragma once

#include <stdexcept>
#include <string>

namespace tiealg {

// Every exception thrown on purpose by this library derives from Error, so
// callers (notably the CLI) can map failures onto exit codes with a handful
// of catch clauses.  The taxonomy is:
//
//   InputError    — the caller handed us something malformed: unparsable
//                   text, a generator index outside the ambient algebra,
//                   mixed ambient sizes, division by zero, evaluation at a
//                   pole.  Exit code 2.
//   LimitError    — the request is well-formed but we refuse to serve it:
//                   the rewrite step budget ran out, or the parameter n is
//                   beyond the supported range.  Exit code 3.
//   InternalError — an invariant the library itself maintains was observed
//                   to fail.  Always a bug.  Exit code 4.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InputError : public Error {
public:
    using Error::Error;
};

class LimitError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

// --- InputError family -----------------------------------------------------

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : InputError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

// Two elements (or an element and an operation) with different ambient
// algebra sizes were combined.
class AmbientMismatch : public InputError {
public:
    using InputError::InputError;
};

class DivisionByZero : public InputError {
public:
    using InputError::InputError;
};

// eval_at hit a parameter value where the denominator vanishes.
class PoleAtPoint : public InputError {
public:
    using InputError::InputError;
};

// --- LimitError family ------------------------------------------------------

class RewriteBudgetExceeded : public LimitError {
public:
    using LimitError::LimitError;
};

class Unsupported : public LimitError {
public:
    using LimitError::LimitError;
};

// --- InternalError family ----------------------------------------------------

// A rank/semisimplicity certificate came out different from what the
// surrounding computation already established.  Never expected to fire.
class RankDeficient : public InternalError {
public:
    using InternalError::InternalError;
};

// A matrix tuple presented as a representation fails a defining relation.
class RelationViolation : public InternalError {
public:
    using InternalError::InternalError;
};

// The coset-walk case split produced an outcome outside its two legal cases.
class CaseViolation : public InternalError {
public:
    using InternalError::InternalError;
};

// A map expected to intertwine two representations failed to do so.
class IntertwinerFailure : public InternalError {
public:
    using InternalError::InternalError;
};

// A subspace expected to be stable under the module action was not.
class NotInvariant : public InternalError {
public:
    using InternalError::InternalError;
};

[[noreturn]] inline void internal_check_failed(const char* expr, const char* file, int line) {
    throw InternalError(std::string("internal invariant failed: ") + expr + " at " + file + ":" +
                        std::to_string(line));
}

// Assert-like guard that throws InternalError instead of aborting, so the CLI
// can still exit with a well-defined code.
#define TIEALG_CHECK(expr) \
    do { \
        if (!(expr)) ::tiealg::internal_check_failed(#expr, __FILE__, __LINE__); \
    } while (false)

}  // namespace tiealg
