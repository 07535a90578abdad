#pragma once

#include <string_view>

namespace ginicor {

/// Exponent applied to Euclidean distances, restricted to (0, 2].
///
/// Values strictly below 2 give a dependence measure that is zero only under
/// independence. Exactly 2 is accepted (it reproduces the ANOVA R^2 in one
/// dimension) but is not characterizing; `characterizing()` reports which
/// regime a value is in.
class Alpha {
public:
    explicit Alpha(double value);

    static Alpha one() { return Alpha(1.0); }

    double value() const noexcept { return value_; }
    bool is_one() const noexcept { return value_ == 1.0; }
    bool characterizing() const noexcept { return value_ < 2.0; }

    friend bool operator==(const Alpha&, const Alpha&) = default;

private:
    double value_;
};

/// U: average over distinct pairs. V: plug-in average over all ordered pairs.
enum class EstimatorKind { U, V };

std::string_view to_string(EstimatorKind kind);
EstimatorKind parse_estimator_kind(std::string_view text);

}  // namespace ginicor
