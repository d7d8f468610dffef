#pragma once

#include <stdexcept>
#include <string>

namespace majring {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyText : Error {
    EmptyText() : Error("configuration text is empty") {}
};

struct InvalidCharacter : Error {
    explicit InvalidCharacter(char c, std::size_t pos)
        : Error("invalid character '" + std::string(1, c) + "' at position " + std::to_string(pos) +
                " (expected '0' or '1')") {}
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct NotTemporallyPeriodic : PreconditionViolated {
    NotTemporallyPeriodic() : PreconditionViolated("configuration is not temporally periodic") {}
};

struct HomogeneousConfiguration : PreconditionViolated {
    HomogeneousConfiguration() : PreconditionViolated("configuration is homogeneous") {}
};

struct LengthMismatch : Error {
    LengthMismatch(int a, int b)
        : Error("ring sizes differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct OverlayUnavailable : Error {
    OverlayUnavailable() : Error("stability overlay is not available for pgm output") {}
};

} // namespace majring
