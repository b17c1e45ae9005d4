#include "illusion/synthesis.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "illusion/errors.hpp"

namespace illusion {

namespace {

constexpr Complex kJ{0.0, 1.0};

// Interface coefficients and one-way phases of a three-layer chain, plus the
// termination reflection behind layer 3.
struct ChainTerms {
    std::array<Complex, kChainLayers> rho;
    std::array<Complex, kChainLayers> phase;
    std::array<Complex, kChainLayers> inv_phase;
    Complex termination;
};

ChainTerms chain_terms(const Stack& stack, const PlaneWave& wave)
{
    if (stack.layers().size() != kChainLayers)
        throw Error(ErrorKind::InvalidInput, "closed-form synthesis needs exactly 3 layers, got " +
                                                 std::to_string(stack.layers().size()));
    const StackAnalysis analysis = analyze_stack(stack, wave);
    ChainTerms t;
    for (std::size_t n = 0; n < kChainLayers; ++n) {
        t.rho[n] = analysis.segments[n].interface.rho;
        t.phase[n] = analysis.segments[n].phase;
        t.inv_phase[n] = 1.0 / t.phase[n];
    }
    t.termination = analysis.termination_rho;
    return t;
}

// Expanded entries of the unnormalized product P1 P2 P3 contracted with
// [1, rho_4]. `forward` is the m11 + m12 rho_4 combination and `backward`
// the m21 + m22 rho_4 one.
struct ContractedChain {
    Complex forward;
    Complex backward;
};

ContractedChain contract(const ChainTerms& t)
{
    const auto [r1, r2, r3] = t.rho;
    const auto [z1, z2, z3] = t.phase;
    const auto [z1i, z2i, z3i] = t.inv_phase;
    const Complex r4 = t.termination;

    const Complex forward =
        ((z1i * z2i + r1 * z1 * r2 * z2i) * z3i + (z1i * r2 * z2 + r1 * z1 * z2) * r3 * z3i) +
        ((z1i * z2i + r1 * z1 * r2 * z2i) * r3 * z3 + (z1i * r2 * z2 + r1 * z1 * z2) * z3) * r4;
    const Complex backward =
        ((r1 * z1i * z2i + z1 * r2 * z2i) * z3i + (r1 * z1i * r2 * z2 + z1 * z2) * r3 * z3i) +
        ((r1 * z1i * z2i + z1 * r2 * z2i) * r3 * z3 + (r1 * z1i * r2 * z2 + z1 * z2) * z3) * r4;
    return {forward, backward};
}

bool degenerate(Complex difference, Complex lhs, Complex rhs)
{
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return !is_finite(difference) || std::abs(difference) <= kDegeneracyTolerance * scale ||
           std::abs(difference) <= kSingularDenominator;
}

Complex checked_ratio(Complex numerator, Complex lhs, Complex rhs, const char* what)
{
    const Complex denominator = lhs - rhs;
    if (degenerate(denominator, lhs, rhs))
        throw Error(ErrorKind::DegenerateSynthesis, what);
    const Complex value = numerator / denominator;
    if (!is_finite(value))
        throw Error(ErrorKind::DegenerateSynthesis, what);
    return value;
}

}  // namespace

IllusionProblem::IllusionProblem(Stack actual, Stack target, PlaneWave wave, SynthesisMode mode)
    : actual_(std::move(actual)), target_(std::move(target)), wave_(wave), mode_(mode)
{
    if (actual_.layers().size() != kChainLayers)
        throw Error(ErrorKind::InvalidInput,
                    "the actual stack must hold exactly 3 layers ahead of the sheet plane");
}

Complex target_reflection(const IllusionProblem& problem)
{
    return chain_reflection(problem.target(), problem.wave());
}

ReflectiveTerms reflective_terms(const IllusionProblem& problem)
{
    const ChainTerms f = chain_terms(problem.actual(), problem.wave());
    const ContractedChain target = contract(chain_terms(problem.target(), problem.wave()));

    const auto [r1, r2, r3] = f.rho;
    const auto [z1, z2, z3] = f.phase;
    const auto [z1i, z2i, z3i] = f.inv_phase;
    const Complex r4 = f.termination;

    const Complex m22 = (r1 * z1i * z2i + z1 * r2 * z2i) * r3 * z3 + (r1 * z1i * r2 * z2 + z1 * z2) * z3;
    const Complex m12 = (z1i * z2i + r1 * z1 * r2 * z2i) * r3 * z3 + (z1i * r2 * z2 + r1 * z1 * z2) * z3;
    const Complex m11 = (z1i * z2i + r1 * z1 * r2 * z2i) * z3i + (z1i * r2 * z2 + r1 * z1 * z2) * r3 * z3i;
    const Complex m21 = (r1 * z1i * z2i + z1 * r2 * z2i) * z3i + (r1 * z1i * r2 * z2 + z1 * z2) * r3 * z3i;

    ReflectiveTerms terms;
    terms.a_base = m22 * target.forward;
    terms.b_base = m12 * target.backward;
    terms.a = m22 * r4 * target.forward;
    terms.b = m12 * r4 * target.backward;
    terms.c = m11 * target.backward;
    terms.d = m21 * target.forward;
    return terms;
}

Complex reflective_synthesis_closed_form(const IllusionProblem& problem)
{
    const ReflectiveTerms t = reflective_terms(problem);
    return checked_ratio(t.c - t.d, t.a_base, t.b_base,
                         "reflective synthesis is degenerate: no termination reaches the target");
}

Complex reflective_synthesis_printed(const IllusionProblem& problem)
{
    const ReflectiveTerms t = reflective_terms(problem);
    return checked_ratio(t.a - t.b, t.c, t.d, "printed reflective form has C = D");
}

Complex invert_termination_map(const TransferMatrix2& m, Complex gamma)
{
    const Complex lhs = m.m22;
    const Complex rhs = gamma * m.m12;
    return checked_ratio(gamma * m.m11 - m.m21, lhs, rhs,
                         "fractional-linear map cannot reach the requested reflection");
}

Complex reflective_synthesis_oracle(const IllusionProblem& problem)
{
    const TransferMatrix2 m = analyze_stack(problem.actual(), problem.wave()).matrix;
    return invert_termination_map(m, target_reflection(problem));
}

TransmissiveTerms transmissive_terms(const IllusionProblem& problem)
{
    const ChainTerms f = chain_terms(problem.actual(), problem.wave());
    const ContractedChain target = contract(chain_terms(problem.target(), problem.wave()));

    const auto [r1, r2, r3] = f.rho;
    static_cast<void>(r1);  // replaced by the unknown sheet
    const auto [z1, z2, z3] = f.phase;
    const auto [z1i, z2i, z3i] = f.inv_phase;
    const Complex r4 = f.termination;

    const Complex front_a =
        z3i * z1 * r2 * z2i + r3 * z3i * z1 * z2 + r4 * r3 * z3 * z1 * r2 * z2i + r4 * z3 * z1 * z2;
    const Complex front_b =
        z1i * z2i * z3i + z1i * r2 * z2 * r3 * z3i + z1i * z2i * r3 * z3 * r4 + z1i * r2 * z2 * z3 * r4;
    const Complex front_c =
        z1 * r2 * z2i * z3i + r3 * z3i * z1 * z2 + r3 * z3 * z1 * r2 * z2i * r4 + r4 * z3 * z1 * z2;
    const Complex front_d = front_b;

    return {front_a * target.backward, front_b * target.forward, front_c * target.forward,
            front_d * target.backward};
}

Complex electric_susceptibility_from_reflection(Complex rho, double k0, Complex cos_theta)
{
    const Complex gap = 1.0 - rho;
    if (std::abs(gap) <= kSingularDenominator)
        throw Error(ErrorKind::DegenerateSynthesis, "rho = 1 has no finite susceptibility");
    return rho / (kJ * (0.5 * k0 / cos_theta) * gap);
}

TransmissiveDesign transmissive_synthesis(const IllusionProblem& problem)
{
    const TransmissiveTerms t = transmissive_terms(problem);
    const Complex rho = checked_ratio(t.c - t.d, t.a, t.b,
                                      "transmissive synthesis is degenerate at this point");
    const LayerWaveState incident = incident_wave_state(problem.actual().incident(), problem.wave());
    return {rho, electric_susceptibility_from_reflection(rho, problem.wave().k0(), incident.cos_theta)};
}

Complex transmissive_synthesis_printed(const IllusionProblem& problem)
{
    const TransmissiveTerms t = transmissive_terms(problem);
    return checked_ratio(t.a - t.b, t.c, t.d, "printed transmissive form has c = d");
}

Complex transmissive_synthesis_oracle(const IllusionProblem& problem)
{
    const StackAnalysis analysis = analyze_stack(problem.actual(), problem.wave());
    const std::vector<Segment> tail(analysis.segments.begin() + 1, analysis.segments.end());
    const TransferMatrix2 rest = chain_matrix(tail);
    const Complex forward = rest.m11 + rest.m12 * analysis.termination_rho;
    const Complex backward = rest.m21 + rest.m22 * analysis.termination_rho;

    const Complex z1 = analysis.segments.front().phase;
    const Complex gamma = target_reflection(problem);
    // Gamma(rho) = (rho f / Z1 + Z1 b) / (f / Z1 + rho Z1 b)
    const Complex lhs = forward / z1;
    const Complex rhs = gamma * z1 * backward;
    return checked_ratio(gamma * forward / z1 - z1 * backward, lhs, rhs,
                         "front-sheet map cannot reach the requested reflection");
}

Complex chain_reflection_with_front_sheet(const Stack& stack, const PlaneWave& wave, Complex rho_1)
{
    StackAnalysis analysis = analyze_stack(stack, wave);
    // The 1/tau prefactor of a segment cancels in Gamma.
    analysis.segments.front().interface = {rho_1, Complex{1.0, 0.0}};
    return reflection_from_matrix(chain_matrix(analysis.segments), analysis.termination_rho);
}

Realizability classify_realizability(Complex rho)
{
    constexpr double tolerance = 1e-12;
    if (std::abs(rho) > 1.0 + tolerance)
        return Realizability::ActiveRequired;
    if (std::abs(1.0 - rho) <= kSingularDenominator)
        return Realizability::Passive;  // open circuit, lossless
    const Complex eta = impedance_from_reflection(rho).eta_normalized;
    return eta.real() >= -tolerance * std::abs(eta) ? Realizability::Passive
                                                    : Realizability::ActiveRequired;
}

SynthesisOutcome synthesize(const IllusionProblem& problem)
{
    SynthesisOutcome out{problem.mode(), {}, std::nullopt, std::nullopt, Realizability::Passive,
                         problem.wave().theta(), problem.wave().frequency()};
    if (problem.mode() == SynthesisMode::Reflective) {
        out.rho_required = reflective_synthesis_closed_form(problem);
        out.eta_required = impedance_from_reflection(out.rho_required);
    } else {
        const TransmissiveDesign design = transmissive_synthesis(problem);
        out.rho_required = design.rho_1m;
        out.chi_e_required = design.chi_e;
    }
    out.realizability = classify_realizability(out.rho_required);
    return out;
}

}  // namespace illusion
