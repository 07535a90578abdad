#include "ginicor/types.hpp"

#include <cmath>
#include <string>

#include "ginicor/error.hpp"

namespace ginicor {

Alpha::Alpha(double value) : value_(value) {
    if (!std::isfinite(value) || value <= 0.0 || value > 2.0) {
        throw_usage("alpha must lie in (0, 2], got " + std::to_string(value));
    }
}

std::string_view to_string(EstimatorKind kind) {
    return kind == EstimatorKind::U ? "U" : "V";
}

EstimatorKind parse_estimator_kind(std::string_view text) {
    if (text == "U" || text == "u") return EstimatorKind::U;
    if (text == "V" || text == "v") return EstimatorKind::V;
    throw_usage("estimator kind must be U or V, got '" + std::string(text) + "'");
}

}  // namespace ginicor
