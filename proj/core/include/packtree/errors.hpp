#pragma once

#include <stdexcept>
#include <string>

namespace packtree {

struct NotATree : std::runtime_error {
    explicit NotATree(const std::string& what) : std::runtime_error(what) {}
};

struct BadVertexId : std::runtime_error {
    explicit BadVertexId(const std::string& what) : std::runtime_error(what) {}
};

struct SizeMismatch : std::runtime_error {
    explicit SizeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct BadParameter : std::runtime_error {
    explicit BadParameter(const std::string& what) : std::runtime_error(what) {}
};

struct LimitExceeded : std::runtime_error {
    explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OrderTooLarge : std::runtime_error {
    explicit OrderTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// An operation O1..O7 was attempted where its precondition does not hold.
struct PreconditionViolated : std::runtime_error {
    PreconditionViolated(const std::string& kind, const std::string& reason,
                         int step = -1)
        : std::runtime_error(step >= 0
                                 ? kind + " at step " + std::to_string(step) + ": " + reason
                                 : kind + ": " + reason),
          kind_name(kind), step_index(step) {}
    std::string kind_name;
    int step_index;
};

// Internal gap in the decomposer: must never fire on a uniquely
// 3-packable input.
struct DecompositionFailed : std::logic_error {
    explicit DecompositionFailed(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace packtree
