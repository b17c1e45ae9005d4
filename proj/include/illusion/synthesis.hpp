#pragma once

#include <cstddef>
#include <optional>

#include "illusion/gstc.hpp"
#include "illusion/wavecore.hpp"

namespace illusion {

enum class SynthesisMode { Reflective, Transmissive };

enum class Realizability { Passive, ActiveRequired };

/// Number of layers the three-segment closed forms are written for.
inline constexpr std::size_t kChainLayers = 3;

/// Relative size below which a synthesis denominator counts as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-12;

/// The environment that physically exists (`actual`), the one the observer
/// should infer (`target`), and the excitation. In reflective mode the sheet
/// replaces the actual termination; in transmissive mode it sits at the
/// front face, replacing the first interface.
class IllusionProblem {
public:
    IllusionProblem(Stack actual, Stack target, PlaneWave wave, SynthesisMode mode);

    const Stack& actual() const noexcept { return actual_; }
    const Stack& target() const noexcept { return target_; }
    const PlaneWave& wave() const noexcept { return wave_; }
    SynthesisMode mode() const noexcept { return mode_; }

private:
    Stack actual_;
    Stack target_;
    PlaneWave wave_;
    SynthesisMode mode_;
};

/// Closed-form building blocks for the reflective case, transcribed term by
/// term. `a` and `b` carry a trailing factor of the actual termination rho;
/// `a_base` and `b_base` are the same polynomials without it.
struct ReflectiveTerms {
    Complex a, b, c, d;
    Complex a_base, b_base;
};

/// Closed-form building blocks for the transmissive case.
struct TransmissiveTerms {
    Complex a, b, c, d;
};

struct TransmissiveDesign {
    Complex rho_1m;
    Complex chi_e;  ///< meters, with chi_m = 0
};

struct SynthesisOutcome {
    SynthesisMode mode;
    Complex rho_required;
    std::optional<SheetImpedance> eta_required;  ///< reflective mode
    std::optional<Complex> chi_e_required;       ///< transmissive mode
    Realizability realizability;
    double theta;
    double frequency;
};

/// Total reflection of the target environment.
Complex target_reflection(const IllusionProblem& problem);

ReflectiveTerms reflective_terms(const IllusionProblem& problem);

/// Required termination reflection from the expanded closed form,
/// (C - D) / (A_base - B_base).
Complex reflective_synthesis_closed_form(const IllusionProblem& problem);

/// (A - B) / (C - D) exactly as printed. This evaluates to rho_4 / rho_4m
/// rather than rho_4m and is kept only to report the discrepancy.
Complex reflective_synthesis_printed(const IllusionProblem& problem);

/// Inverts Gamma(rho) = (m21 + m22 rho) / (m11 + m12 rho) for rho.
Complex invert_termination_map(const TransferMatrix2& m, Complex gamma);

/// Independent route: chain matrix of the actual stack plus Moebius inversion.
Complex reflective_synthesis_oracle(const IllusionProblem& problem);

TransmissiveTerms transmissive_terms(const IllusionProblem& problem);

/// (c - d) / (a - b) followed by the electric-only susceptibility.
TransmissiveDesign transmissive_synthesis(const IllusionProblem& problem);

/// (a - b) / (c - d) exactly as printed; evaluates to 1 / rho_1m.
Complex transmissive_synthesis_printed(const IllusionProblem& problem);

/// Independent route: inversion of the first-segment fractional-linear map.
Complex transmissive_synthesis_oracle(const IllusionProblem& problem);

/// Chain reflection of `stack` with its first interface coefficient replaced
/// by `rho_1` (a transmissive sheet at the front face).
Complex chain_reflection_with_front_sheet(const Stack& stack, const PlaneWave& wave, Complex rho_1);

/// chi_e = rho / (j k0 / (2 cos(theta)) (1 - rho)).
Complex electric_susceptibility_from_reflection(Complex rho, double k0, Complex cos_theta);

Realizability classify_realizability(Complex rho);

SynthesisOutcome synthesize(const IllusionProblem& problem);

}  // namespace illusion
