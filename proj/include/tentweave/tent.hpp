#pragma once

#include <cstddef>
#include <vector>

#include "tentweave/symbolic.hpp"

namespace tentweave {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double width() const { return hi - lo; }
};

// Numeric tent map T_s(t) = min(st, s(1-t)) with a cached critical orbit.
class TentParams {
public:
    explicit TentParams(double slope, std::size_t cache = 256);

    double slope() const { return s_; }
    double c() const { return 0.5; }
    double T(double t) const;
    // T^n(c); orbit(0) = c.
    double orbit(std::size_t n) const;

private:
    double s_;
    std::vector<double> orbit_;
};

// Interval of zeroth coordinates of points whose backward itinerary ends in w
// (written s_k...s_1, the rightmost symbol being s_1). Rounded outward.
Interval numeric_backward_interval(const Word& w, const TentParams& params);

}  // namespace tentweave
