#pragma once

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "illusion/wavecore.hpp"

namespace illusion {

inline constexpr std::string_view kReflectionMapHeader = "f_ghz,r_ohm,c_pf,rho_re,rho_im";
inline constexpr double kDefaultMinAmplitude = 0.3;

/// One tuning state of a unit cell, stored in SI units.
struct UnitCellRecord {
    double frequency_hz;
    double resistance_ohm;
    double capacitance_f;
    Complex rho;

    double frequency_ghz() const noexcept { return frequency_hz / 1e9; }
    double capacitance_pf() const noexcept { return capacitance_f / 1e-12; }
};

class ReflectionMap {
public:
    explicit ReflectionMap(std::vector<UnitCellRecord> records);

    const std::vector<UnitCellRecord>& records() const noexcept { return records_; }
    /// Sorted distinct frequencies in Hz.
    const std::vector<double>& frequencies() const noexcept { return frequencies_; }

    /// Records whose frequency matches `frequency_hz` to 1e-9 relative.
    std::vector<UnitCellRecord> at_frequency(double frequency_hz) const;

private:
    std::vector<UnitCellRecord> records_;
    std::vector<double> frequencies_;
};

enum class DistanceMetric { Complex, PhaseOnly };

struct CodingSet {
    int n_bit;
    double phase_step;                   ///< 2 pi / 2^n_bit
    std::vector<double> target_phases;   ///< phi_0 + k * phase_step, unwrapped
    std::vector<UnitCellRecord> states;  ///< one per slot, slot order
};

ReflectionMap parse_reflection_map(std::istream& in);
ReflectionMap load_reflection_map(const std::filesystem::path& path);

/// |((a - b + pi) mod 2 pi) - pi|, in [0, pi].
double wrapped_phase_distance(double a, double b);

/// Nearest state to `rho_target` at the given frequency; ties go to the
/// smaller R, then the smaller C.
UnitCellRecord select_state(const ReflectionMap& map, double frequency_hz, Complex rho_target,
                            DistanceMetric metric = DistanceMetric::Complex);

CodingSet build_coding_set(const ReflectionMap& map, double frequency_hz, int n_bit,
                           double min_amplitude = kDefaultMinAmplitude);

}  // namespace illusion
