#pragma once

#include <stdexcept>
#include <string>

namespace tri {

// Problems with user-supplied data. The CLI maps these to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated internal invariants. These correspond to facts that are theorems
// for valid inputs; one firing means the implementation is wrong, not the
// input. The CLI maps these to exit code 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed input text (point files, documents). CLI exit code 1.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : InputError {
    using InputError::InputError;
};

struct CoordinateOutOfRange : InputError {
    using InputError::InputError;
};

struct WrongCardinality : InputError {
    using InputError::InputError;
};

struct PreconditionViolated : InputError {
    using InputError::InputError;
};

struct NotBoundary : InputError {
    using InputError::InputError;
};

struct InsidePoint : InputError {
    using InputError::InputError;
};

struct TooFewPoints : InputError {
    using InputError::InputError;
};

struct DuplicatePoint : InputError {
    DuplicatePoint(std::size_t first, std::size_t second)
        : InputError("duplicate point: index " + std::to_string(second) +
                     " repeats index " + std::to_string(first)),
          first_index(first),
          second_index(second) {}
    std::size_t first_index;
    std::size_t second_index;
};

struct CollinearTriple : InputError {
    CollinearTriple(std::size_t i, std::size_t j, std::size_t k)
        : InputError("collinear triple: indices " + std::to_string(i) + ", " +
                     std::to_string(j) + ", " + std::to_string(k)),
          a(i),
          b(j),
          c(k) {}
    std::size_t a;
    std::size_t b;
    std::size_t c;
};

struct GenerationExhausted : InputError {
    using InputError::InputError;
};

struct NoRedEdge : InternalError {
    using InternalError::InternalError;
};

struct MultipleContainers : InternalError {
    using InternalError::InternalError;
};

struct ContiguityViolation : InternalError {
    using InternalError::InternalError;
};

struct MalformedBoundary : InternalError {
    using InternalError::InternalError;
};

}  // namespace tri
