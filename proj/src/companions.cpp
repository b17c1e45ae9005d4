#include "illusion/companions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "illusion/errors.hpp"

namespace illusion {

RadialTransform::RadialTransform(double inner_radius, double outer_radius, double compression)
    : inner_(inner_radius), outer_(outer_radius), compression_(compression)
{
    if (!(inner_ > 0.0) || !(outer_ > inner_) || !(compression_ > 1.0) ||
        !(inner_ * compression_ < outer_) || !std::isfinite(outer_) || !std::isfinite(compression_))
        throw Error(ErrorKind::InvalidInput, "radial transform needs 0 < R1 < R1 q < R2 and q > 1");
    const double span = outer_ - inner_ * compression_;
    slope_ = (outer_ - inner_) / span;
    offset_ = (1.0 - compression_) * outer_ * inner_ / span;
}

double RadialTransform::forward(double r) const
{
    if (!(r >= 0.0 && r <= outer_))
        throw Error(ErrorKind::Domain, "radius " + std::to_string(r) + " outside [0, R2]");
    if (r <= inner_ * compression_)
        return r / compression_;
    // R2 is a fixed point; keep rounding from pushing it out of the domain
    return std::min(slope_ * r + offset_, outer_);
}

double RadialTransform::inverse(double r_prime) const
{
    if (!(r_prime >= 0.0 && r_prime <= outer_))
        throw Error(ErrorKind::Domain, "radius " + std::to_string(r_prime) + " outside [0, R2]");
    if (r_prime <= inner_)
        return compression_ * r_prime;
    return std::min((r_prime - offset_) / slope_, outer_);
}

StripProfile::StripProfile(double amplitude, double period_m, int sigma)
    : amplitude_(amplitude), period_(period_m), sigma_(sigma)
{
    if (!(amplitude_ > 0.0) || !std::isfinite(amplitude_) || !(period_ > 0.0) || !std::isfinite(period_))
        throw Error(ErrorKind::InvalidInput, "strip amplitude and period must be positive");
    if (sigma_ != 1 && sigma_ != -1)
        throw Error(ErrorKind::InvalidInput, "handedness must be +1 or -1");
}

double StripProfile::height(double x) const
{
    if (!std::isfinite(x))
        throw Error(ErrorKind::InvalidInput, "strip coordinate must be finite");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return amplitude_ * period_ / two_pi * std::sin(two_pi * x / period_);
}

double StripProfile::pb_phase(double x) const
{
    if (!std::isfinite(x))
        throw Error(ErrorKind::InvalidInput, "strip coordinate must be finite");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return 2.0 * sigma_ * std::atan(amplitude_ * std::cos(two_pi * x / period_));
}

double radial_forward(const RadialTransform& t, double r) { return t.forward(r); }
double radial_inverse(const RadialTransform& t, double r_prime) { return t.inverse(r_prime); }
double strip_height(const StripProfile& p, double x) { return p.height(x); }
double pb_phase(const StripProfile& p, double x) { return p.pb_phase(x); }

double grating_angle(int order, double wavelength_m, double period_m)
{
    if (!(wavelength_m > 0.0) || !(period_m > 0.0))
        throw Error(ErrorKind::InvalidInput, "wavelength and period must be positive");
    const double s = order * wavelength_m / period_m;
    if (std::abs(s) > 1.0)
        throw Error(ErrorKind::EvanescentOrder, "order " + std::to_string(order) + " is evanescent");
    return std::asin(s);
}

}  // namespace illusion
