#pragma once

#include "illusion/wavecore.hpp"

namespace illusion {

/// Scalar surface susceptibilities of a zero-thickness sheet, in meters.
struct Susceptibilities {
    Complex chi_e;
    Complex chi_m;
};

struct SheetCoefficients {
    Complex tau;
    Complex rho;
};

struct SheetImpedance {
    Complex eta;             ///< ohm
    Complex eta_normalized;  ///< eta / eta0
};

/// Tangential field samples on both faces of a sheet (1 = incident side).
struct FieldJump {
    Complex e1, e2;
    Complex h1, h2;

    Complex e_average() const { return 0.5 * (e1 + e2); }
    Complex h_average() const { return 0.5 * (h1 + h2); }
};

struct SurfaceCurrents {
    Complex electric;
    Complex magnetic;
};

struct IbcResidual {
    Complex electric;
    Complex magnetic;
};

/// Sheet transmission and reflection from (chi_e, chi_m). The wavenumber is
/// taken as k0 / cos(theta), which is k0 at normal incidence.
SheetCoefficients sheet_coefficients(const Susceptibilities& chi, double k0, Complex cos_theta);

/// eta0 (1 + rho) / (1 - rho); rho == 1 is an open circuit and throws.
SheetImpedance impedance_from_reflection(Complex rho);

/// (eta - eta0) / (eta + eta0).
Complex reflection_from_impedance(Complex eta);

/// J_e = H2 - H1, J_m = E2 - E1.
SurfaceCurrents surface_currents(const FieldJump& jump);

// Residuals of (H2 - H1) = E_av / Z_e and (E2 - E1) = H_av Z_m. Z_e = 0
// is the PEC limit: accepted only when E_av vanishes, giving a zero
// electric residual.
IbcResidual ibc_residual(const FieldJump& jump, Complex z_e, Complex z_m);

}  // namespace illusion
