#include "bfamily/grid.hpp"

#include <string>

#include "bfamily/error.hpp"

namespace bfamily {

GridSpec make_grid(int n_modes) {
    if (n_modes % 2 != 0) {
        throw Error(ErrorCode::OddResolution, "K = " + std::to_string(n_modes) + " must be even");
    }
    if (n_modes < GridSpec::kMinModes) {
        throw Error(ErrorCode::ResolutionTooSmall,
                    "K = " + std::to_string(n_modes) + " is below " + std::to_string(GridSpec::kMinModes));
    }
    return GridSpec(n_modes);
}

}  // namespace bfamily
