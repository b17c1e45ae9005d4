#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <variant>
#include <vector>

namespace illusion {

using Complex = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;        // m/s
inline constexpr double kVacuumImpedance = 376.730313668;   // ohm
inline constexpr double kMaxIncidenceAngle = std::numbers::pi / 2.0;

/// Magnitude below which a complex denominator is treated as zero.
inline constexpr double kSingularDenominator = 1e-300;

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Relative permittivity and permeability under the exp(+jwt) convention:
/// passive losses carry a negative imaginary part (FR4 is 3.9 - 0.08j).
class Medium {
public:
    explicit Medium(Complex eps_r, Complex mu_r = {1.0, 0.0});

    static Medium vacuum() { return Medium(Complex{1.0, 0.0}); }

    Complex eps_r() const noexcept { return eps_r_; }
    Complex mu_r() const noexcept { return mu_r_; }

    /// Complex refractive index sqrt(eps_r * mu_r), principal branch.
    Complex index() const { return std::sqrt(eps_r_ * mu_r_); }

    /// Intrinsic wave impedance eta0 * sqrt(mu_r / eps_r).
    Complex impedance() const { return kVacuumImpedance * std::sqrt(mu_r_ / eps_r_); }

    bool operator==(const Medium&) const = default;

private:
    Complex eps_r_;
    Complex mu_r_;
};

class Layer {
public:
    Layer(Medium medium, double thickness_m);

    const Medium& medium() const noexcept { return medium_; }
    double thickness() const noexcept { return thickness_; }

    bool operator==(const Layer&) const = default;

private:
    Medium medium_;
    double thickness_;
};

struct Pec {
    bool operator==(const Pec&) const = default;
};

struct OpenHalfSpace {
    Medium medium;
    bool operator==(const OpenHalfSpace&) const = default;
};

/// Zero-thickness reflecting sheet described by its reflection coefficient.
struct Sheet {
    Complex rho;
    bool operator==(const Sheet&) const = default;
};

using Termination = std::variant<Pec, OpenHalfSpace, Sheet>;

/// Incident half-space, ordered layers (interfaces numbered from the incident
/// side) and the termination behind the last layer.
class Stack {
public:
    Stack(Medium incident, std::vector<Layer> layers, Termination termination);

    const Medium& incident() const noexcept { return incident_; }
    const std::vector<Layer>& layers() const noexcept { return layers_; }
    const Termination& termination() const noexcept { return termination_; }

    Stack with_termination(Termination termination) const;

    bool operator==(const Stack&) const = default;

private:
    Medium incident_;
    std::vector<Layer> layers_;
    Termination termination_;
};

enum class Polarization { TM };

class PlaneWave {
public:
    PlaneWave(double frequency_hz, double theta_rad, Polarization polarization = Polarization::TM);

    double frequency() const noexcept { return frequency_; }
    double theta() const noexcept { return theta_; }
    Polarization polarization() const noexcept { return polarization_; }

    /// Free-space wavenumber 2*pi*f/c.
    double k0() const noexcept { return 2.0 * std::numbers::pi * frequency_ / kSpeedOfLight; }

private:
    double frequency_;
    double theta_;
    Polarization polarization_;
};

struct LayerWaveState {
    Complex k;          ///< wavenumber in the region, rad/m
    Complex theta;      ///< complex refraction angle
    Complex eta;        ///< intrinsic wave impedance, ohm
    Complex sin_theta;  ///< carries the conserved transverse wavenumber k*sin(theta)
    Complex cos_theta;  ///< principal branch, Re >= 0
};

struct InterfaceCoefficients {
    Complex rho;
    Complex tau;
};

struct TransferMatrix2 {
    Complex m11{1.0, 0.0};
    Complex m12{0.0, 0.0};
    Complex m21{0.0, 0.0};
    Complex m22{1.0, 0.0};

    static TransferMatrix2 identity() { return {}; }

    Complex determinant() const { return m11 * m22 - m12 * m21; }

    friend TransferMatrix2 operator*(const TransferMatrix2& a, const TransferMatrix2& b)
    {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
};

/// Wave state in the incident half-space: real incidence angle.
LayerWaveState incident_wave_state(const Medium& medium, const PlaneWave& wave);

/// Refracts `previous` into `medium`, conserving k*sin(theta).
LayerWaveState layer_wave_state(const Medium& medium, const PlaneWave& wave,
                                const LayerWaveState& previous);

/// Local reflection/transmission coefficients going from region n to n+1,
/// built on the transverse impedance eta*cos(theta).
InterfaceCoefficients interface_coefficients(const LayerWaveState& state_n,
                                             const LayerWaveState& state_np1);

/// One-way propagation factor exp(-j k l cos(theta)) across a layer.
Complex propagation_phase(const LayerWaveState& state, double thickness_m);

/// (1/tau) [[1/Z, rho Z], [rho/Z, Z]]: interface followed by the layer.
TransferMatrix2 segment_matrix(Complex rho, Complex tau, Complex phase);

struct Segment {
    LayerWaveState state;
    InterfaceCoefficients interface;
    Complex phase;
};

/// Everything the chain evaluation produces, kept for callers that need the
/// per-segment coefficients (the closed-form synthesis does).
struct StackAnalysis {
    LayerWaveState incident;
    std::vector<Segment> segments;
    Complex termination_rho;
    TransferMatrix2 matrix;
};

StackAnalysis analyze_stack(const Stack& stack, const PlaneWave& wave);

/// Reflection coefficient seen just behind the last layer.
Complex termination_reflection(const Stack& stack, const PlaneWave& wave,
                               const LayerWaveState& last_layer);

/// Product of the segment matrices in incident-to-termination order.
TransferMatrix2 chain_matrix(const std::vector<Segment>& segments);

/// Gamma = (m21 + m22 rho_T) / (m11 + m12 rho_T).
Complex reflection_from_matrix(const TransferMatrix2& m, Complex termination_rho);

/// Total reflection E-/E+ at the incident side of interface 1.
Complex chain_reflection(const Stack& stack, const PlaneWave& wave);

}  // namespace illusion
