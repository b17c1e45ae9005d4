#include "illusion/gstc.hpp"

#include "illusion/errors.hpp"

namespace illusion {

namespace {
constexpr Complex kJ{0.0, 1.0};
}

SheetCoefficients sheet_coefficients(const Susceptibilities& chi, double k0, Complex cos_theta)
{
    if (!is_finite(chi.chi_e) || !is_finite(chi.chi_m) || !is_finite(cos_theta))
        throw Error(ErrorKind::InvalidInput, "susceptibilities must be finite");
    if (cos_theta == Complex{})
        throw Error(ErrorKind::InvalidInput, "sheet coefficients undefined at grazing incidence");

    const Complex half_k = 0.5 * k0 / cos_theta;
    const Complex product = half_k * half_k * chi.chi_e * chi.chi_m;
    const Complex denominator = 1.0 + product - kJ * half_k * (chi.chi_m - chi.chi_e);
    if (std::abs(denominator) <= kSingularDenominator)
        throw Error(ErrorKind::SheetResonance, "sheet transition denominator vanished");

    return {(1.0 - product) / denominator, kJ * half_k * (chi.chi_m + chi.chi_e) / denominator};
}

SheetImpedance impedance_from_reflection(Complex rho)
{
    if (!is_finite(rho))
        throw Error(ErrorKind::InvalidInput, "reflection coefficient must be finite");
    const Complex gap = 1.0 - rho;
    if (std::abs(gap) <= kSingularDenominator)
        throw Error(ErrorKind::OpenCircuit, "rho = 1 maps to an infinite sheet impedance");
    const Complex normalized = (1.0 + rho) / gap;
    return {kVacuumImpedance * normalized, normalized};
}

Complex reflection_from_impedance(Complex eta)
{
    const Complex denominator = eta + kVacuumImpedance;
    if (std::abs(denominator) <= kSingularDenominator)
        throw Error(ErrorKind::DivisionDomain, "eta = -eta0 has no reflection coefficient");
    return (eta - kVacuumImpedance) / denominator;
}

SurfaceCurrents surface_currents(const FieldJump& jump)
{
    return {jump.h2 - jump.h1, jump.e2 - jump.e1};
}

IbcResidual ibc_residual(const FieldJump& jump, Complex z_e, Complex z_m)
{
    const SurfaceCurrents j = surface_currents(jump);
    const Complex e_av = jump.e_average();

    Complex electric;
    if (z_e == Complex{}) {
        if (e_av != Complex{})
            throw Error(ErrorKind::DivisionDomain, "Z_e = 0 requires a vanishing average E field");
        electric = Complex{};
    } else {
        electric = j.electric - e_av / z_e;
    }
    return {electric, j.magnetic - jump.h_average() * z_m};
}

}  // namespace illusion
