#pragma once

#include <cmath>
#include <optional>

#include "micomp/error.hpp"

namespace micomp {

/// A p-value. Guaranteed to be a finite number in [0, 1]; tests that cannot
/// be computed (single-PC MANOVA, singular covariances, all-tied ranks)
/// report std::nullopt instead, never NaN.
class Probability {
public:
    explicit Probability(double v) : value_(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw degenerate_error("probability outside [0,1]");
    }

    double value() const { return value_; }

private:
    double value_;
};

/// A probability or the explicit not-applicable marker.
using MaybeProbability = std::optional<Probability>;

inline Probability clamped_probability(double v) {
    if (std::isnan(v)) throw degenerate_error("probability is NaN");
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return Probability(v);
}

} // namespace micomp
