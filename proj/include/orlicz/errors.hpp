#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

// Input/precondition violations share a base so the CLI can map them to exit 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadRadiusPolicy : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct EmptyRegion : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DomainTooSmall : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct GridTooCoarse : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Adaptive quadrature exhausted its subdivision budget.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace orlicz
