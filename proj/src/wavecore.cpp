#include "illusion/wavecore.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "illusion/errors.hpp"

namespace illusion {

Medium::Medium(Complex eps_r, Complex mu_r) : eps_r_(eps_r), mu_r_(mu_r)
{
    if (!is_finite(eps_r) || !is_finite(mu_r))
        throw Error(ErrorKind::InvalidMedium, "medium parameters must be finite");
    if (eps_r == Complex{} || mu_r == Complex{})
        throw Error(ErrorKind::InvalidMedium, "medium parameters must be non-zero");
}

Layer::Layer(Medium medium, double thickness_m) : medium_(medium), thickness_(thickness_m)
{
    if (!std::isfinite(thickness_m) || thickness_m < 0.0)
        throw Error(ErrorKind::InvalidInput,
                    "layer thickness must be finite and non-negative, got " +
                        std::to_string(thickness_m));
}

Stack::Stack(Medium incident, std::vector<Layer> layers, Termination termination)
    : incident_(incident), layers_(std::move(layers)), termination_(std::move(termination))
{
    if (layers_.empty())
        throw Error(ErrorKind::InvalidInput, "a stack needs at least one layer");
    if (const auto* sheet = std::get_if<Sheet>(&termination_); sheet && !is_finite(sheet->rho))
        throw Error(ErrorKind::InvalidInput, "sheet reflection coefficient must be finite");
}

Stack Stack::with_termination(Termination termination) const
{
    return Stack(incident_, layers_, std::move(termination));
}

PlaneWave::PlaneWave(double frequency_hz, double theta_rad, Polarization polarization)
    : frequency_(frequency_hz), theta_(theta_rad), polarization_(polarization)
{
    if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
        throw Error(ErrorKind::InvalidInput, "frequency must be positive");
    if (!std::isfinite(theta_rad) || theta_rad < 0.0 || theta_rad >= kMaxIncidenceAngle)
        throw Error(ErrorKind::InvalidInput, "incidence angle must lie in [0, pi/2)");
}

LayerWaveState incident_wave_state(const Medium& medium, const PlaneWave& wave)
{
    const double theta = wave.theta();
    return {wave.k0() * medium.index(), Complex{theta, 0.0}, medium.impedance(),
            Complex{std::sin(theta), 0.0}, Complex{std::cos(theta), 0.0}};
}

LayerWaveState layer_wave_state(const Medium& medium, const PlaneWave& wave,
                                const LayerWaveState& previous)
{
    const Complex k = wave.k0() * medium.index();
    if (!is_finite(k))
        throw Error(ErrorKind::InvalidMedium, "non-finite wavenumber");
    if (k == previous.k)
        return {k, previous.theta, medium.impedance(), previous.sin_theta, previous.cos_theta};

    const Complex sin_theta = previous.k * previous.sin_theta / k;
    const Complex cos_theta = std::sqrt(1.0 - sin_theta * sin_theta);
    return {k, std::asin(sin_theta), medium.impedance(), sin_theta, cos_theta};
}

InterfaceCoefficients interface_coefficients(const LayerWaveState& state_n,
                                             const LayerWaveState& state_np1)
{
    const Complex z_n = state_n.eta * state_n.cos_theta;
    const Complex z_np1 = state_np1.eta * state_np1.cos_theta;
    const Complex denominator = z_np1 + z_n;
    if (!is_finite(denominator) || std::abs(denominator) <= kSingularDenominator)
        throw Error(ErrorKind::DegenerateInterface, "vanishing interface denominator");

    InterfaceCoefficients c{(z_np1 - z_n) / denominator, 2.0 * z_np1 / denominator};
    if (!is_finite(c.rho) || !is_finite(c.tau) ||
        std::abs(1.0 + c.rho - c.tau) > 1e-12 * (1.0 + std::abs(c.tau)))
        throw Error(ErrorKind::DegenerateInterface, "interface coefficients lost 1 + rho = tau");
    return c;
}

Complex propagation_phase(const LayerWaveState& state, double thickness_m)
{
    if (!std::isfinite(thickness_m) || thickness_m < 0.0)
        throw Error(ErrorKind::InvalidInput, "thickness must be finite and non-negative");
    if (thickness_m == 0.0)
        return {1.0, 0.0};
    return std::exp(Complex{0.0, -1.0} * state.k * state.cos_theta * thickness_m);
}

TransferMatrix2 segment_matrix(Complex rho, Complex tau, Complex phase)
{
    if (tau == Complex{} || !is_finite(tau))
        throw Error(ErrorKind::NonInvertibleSegment, "segment transmission coefficient is zero");
    if (phase == Complex{} || !is_finite(phase))
        throw Error(ErrorKind::NonInvertibleSegment, "segment propagation factor vanished");

    const Complex inv_tau = 1.0 / tau;
    const Complex inv_phase = 1.0 / phase;
    return {inv_tau * inv_phase, inv_tau * rho * phase, inv_tau * rho * inv_phase, inv_tau * phase};
}

Complex termination_reflection(const Stack& stack, const PlaneWave& wave,
                               const LayerWaveState& last_layer)
{
    struct Visitor {
        const PlaneWave& wave;
        const LayerWaveState& last;

        Complex operator()(const Pec&) const { return {-1.0, 0.0}; }
        Complex operator()(const Sheet& sheet) const { return sheet.rho; }
        Complex operator()(const OpenHalfSpace& open) const
        {
            const LayerWaveState beyond = layer_wave_state(open.medium, wave, last);
            return interface_coefficients(last, beyond).rho;
        }
    };
    return std::visit(Visitor{wave, last_layer}, stack.termination());
}

TransferMatrix2 chain_matrix(const std::vector<Segment>& segments)
{
    TransferMatrix2 m = TransferMatrix2::identity();
    for (const Segment& s : segments)
        m = m * segment_matrix(s.interface.rho, s.interface.tau, s.phase);
    return m;
}

StackAnalysis analyze_stack(const Stack& stack, const PlaneWave& wave)
{
    StackAnalysis out;
    out.incident = incident_wave_state(stack.incident(), wave);
    out.segments.reserve(stack.layers().size());

    const LayerWaveState* previous = &out.incident;
    for (const Layer& layer : stack.layers()) {
        Segment s;
        s.state = layer_wave_state(layer.medium(), wave, *previous);
        s.interface = interface_coefficients(*previous, s.state);
        s.phase = propagation_phase(s.state, layer.thickness());
        out.segments.push_back(s);
        previous = &out.segments.back().state;
    }
    out.termination_rho = termination_reflection(stack, wave, *previous);
    out.matrix = chain_matrix(out.segments);
    return out;
}

Complex reflection_from_matrix(const TransferMatrix2& m, Complex termination_rho)
{
    const Complex denominator = m.m11 + m.m12 * termination_rho;
    if (!is_finite(denominator) || std::abs(denominator) < kSingularDenominator)
        throw Error(ErrorKind::ResonantSingularity, "chain reflection denominator vanished");
    const Complex gamma = (m.m21 + m.m22 * termination_rho) / denominator;
    if (!is_finite(gamma))
        throw Error(ErrorKind::ResonantSingularity, "chain reflection is not finite");
    return gamma;
}

Complex chain_reflection(const Stack& stack, const PlaneWave& wave)
{
    const StackAnalysis analysis = analyze_stack(stack, wave);
    return reflection_from_matrix(analysis.matrix, analysis.termination_rho);
}

}  // namespace illusion
