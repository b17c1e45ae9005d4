#pragma once

namespace illusion {

/// Piecewise-linear radial map that compresses [0, R1 q] onto [0, R1] and
/// stretches [R1 q, R2] onto [R1, R2], leaving R2 fixed.
class RadialTransform {
public:
    RadialTransform(double inner_radius, double outer_radius, double compression);

    double inner_radius() const noexcept { return inner_; }
    double outer_radius() const noexcept { return outer_; }
    double compression() const noexcept { return compression_; }

    /// Slope and offset of the outer branch r' = slope * r + offset.
    double slope() const noexcept { return slope_; }
    double offset() const noexcept { return offset_; }

    double forward(double r) const;
    double inverse(double r_prime) const;

private:
    double inner_;
    double outer_;
    double compression_;
    double slope_;
    double offset_;
};

/// Sinusoidal strip y = A (P / 2 pi) sin(2 pi x / P) carrying a geometric
/// phase for circularly polarized light of handedness `sigma`.
class StripProfile {
public:
    StripProfile(double amplitude, double period_m, int sigma);

    double amplitude() const noexcept { return amplitude_; }
    double period() const noexcept { return period_; }
    int sigma() const noexcept { return sigma_; }

    double height(double x) const;
    /// 2 sigma atan(A cos(2 pi x / P)).
    double pb_phase(double x) const;

private:
    double amplitude_;
    double period_;
    int sigma_;
};

double radial_forward(const RadialTransform& t, double r);
double radial_inverse(const RadialTransform& t, double r_prime);
double strip_height(const StripProfile& p, double x);
double pb_phase(const StripProfile& p, double x);

/// Deflection angle asin(m lambda / P) of diffraction order m.
double grating_angle(int order, double wavelength_m, double period_m);

}  // namespace illusion
