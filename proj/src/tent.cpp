#include "tentweave/tent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tentweave {

TentParams::TentParams(double slope, std::size_t cache) : s_(slope) {
    if (!(slope > std::sqrt(2.0)) || slope > 2.0) fail("SlopeOutOfRange", "slope must lie in (sqrt 2, 2]");
    orbit_.reserve(cache + 1);
    orbit_.push_back(0.5);
    for (std::size_t i = 1; i <= cache; ++i) orbit_.push_back(T(orbit_.back()));
}

double TentParams::T(double t) const { return std::min(s_ * t, s_ * (1.0 - t)); }

double TentParams::orbit(std::size_t n) const {
    if (n < orbit_.size()) return orbit_[n];
    double x = orbit_.back();
    for (std::size_t i = orbit_.size(); i <= n; ++i) x = T(x);
    return x;
}

namespace {

double down(double x) { return std::max(0.0, std::nextafter(x, -1.0)); }
double up(double x) { return std::min(1.0, std::nextafter(x, 2.0)); }

}  // namespace

Interval numeric_backward_interval(const Word& w, const TentParams& params) {
    if (!is_binary(w)) fail("ParseError", "word must be binary");
    const double s = params.slope(), c = params.c();
    Interval j{0.0, 1.0};
    for (char a : w) {
        double lo = j.lo, hi = j.hi;
        if (a == '0') {
            hi = std::min(hi, c);
            if (lo > hi) fail("EmptyIntervalIfInadmissible", "no backward orbit realizes " + w);
            j = {down(s * lo), up(s * hi)};
        } else {
            lo = std::max(lo, c);
            if (lo > hi) fail("EmptyIntervalIfInadmissible", "no backward orbit realizes " + w);
            j = {down(s * (1.0 - hi)), up(s * (1.0 - lo))};
        }
    }
    return j;
}

}  // namespace tentweave
