#pragma once

#include <stdexcept>
#include <string>

namespace growth {

struct DegreeMismatch : std::invalid_argument {
    explicit DegreeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct GluePreconditionViolated : std::invalid_argument {
    explicit GluePreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct UnmappedVariable : std::invalid_argument {
    explicit UnmappedVariable(const std::string& what) : std::invalid_argument(what) {}
};

struct NotMultihomogeneous : std::invalid_argument {
    explicit NotMultihomogeneous(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedSetCount : std::invalid_argument {
    explicit UnsupportedSetCount(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a cocharacter difference comes out negative; that can only
// happen through an engine bug, never through bad user input.
struct NegativeMultiplicity : std::logic_error {
    explicit NegativeMultiplicity(const std::string& what) : std::logic_error(what) {}
};

}  // namespace growth
