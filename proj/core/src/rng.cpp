#include "diamond/rng.hpp"

#include <cassert>
#include <cmath>

namespace diamond::rng {

namespace {

double gauss_tail(double r) {
    // integral_r^inf exp(-x^2/2) dx (unnormalized density)
    return std::sqrt(3.14159265358979323846 / 2.0) * std::erfc(r / std::sqrt(2.0));
}

// Level reached after stacking 255 equal-area layers on the base; the correct
// ziggurat edge r makes this exactly 1 (= density at 0).
double top_level(double r, double* xs /*size 257*/) {
    const double fr = std::exp(-0.5 * r * r);
    const double v = r * fr + gauss_tail(r);
    xs[0] = v / fr;  // base pseudo-width
    xs[1] = r;
    double level = fr;
    for (int i = 2; i <= 256; ++i) {
        level += v / xs[i - 1];
        if (level >= 1.0) {
            xs[i] = 0.0;
            level = (i == 256) ? level : 2.0;  // overshoot before the top: r too small
            break;
        }
        xs[i] = std::sqrt(-2.0 * std::log(level));
    }
    return level;
}

} // namespace

ZigguratNormal::ZigguratNormal() {
    double xs[257];
    // bisect for the edge abscissa; converges to r = 3.654152885361...
    double lo = 3.0, hi = 4.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (top_level(mid, xs) > 1.0 ? lo : hi) = mid;
    }
    const double r = 0.5 * (lo + hi);
    top_level(r, xs);
    xs[256] = 0.0;

    const double fr = std::exp(-0.5 * r * r);
    const double v = r * fr + gauss_tail(r);
    const double two51 = 0x1.0p51;

    w_[0] = v / fr / two51;
    k_[0] = static_cast<std::int64_t>(two51 * r * fr / v);
    f_[0] = fr;
    for (int i = 1; i < 256; ++i) {
        w_[i] = xs[i] / two51;
        k_[i] = static_cast<std::int64_t>(two51 * (xs[i + 1] / xs[i]));
        f_[i] = std::exp(-0.5 * xs[i] * xs[i]);
    }
    f_[256] = 1.0;
}

const ZigguratNormal& ZigguratNormal::instance() {
    static const ZigguratNormal z;
    return z;
}

} // namespace diamond::rng
