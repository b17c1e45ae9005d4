// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
// usage: acceptance <illusion-cli> <sample-map.csv> <scratch-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "illusion/companions.hpp"
#include "illusion/errors.hpp"
#include "illusion/gstc.hpp"
#include "illusion/scenario.hpp"
#include "illusion/sweep.hpp"
#include "illusion/synthesis.hpp"
#include "illusion/unitcell.hpp"
#include "oracle/linear_system_oracle.hpp"
#include "support/generators.hpp"

using namespace illusion;
namespace fs = std::filesystem;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<PlaneWave> scenario_grid()
{
    std::vector<PlaneWave> waves;
    for (const GridPoint& g : sweep_grid(builtin_scenario().sweep))
        waves.push_back(plane_wave_at(g));
    return waves;
}

IllusionProblem scenario_problem(const PlaneWave& w, SynthesisMode mode)
{
    const ScenarioConfig s = builtin_scenario();
    return IllusionProblem(s.actual, s.target, w, mode);
}

Verdict energy_conservation()
{
    gen::Source src(1001);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Stack s(Medium::vacuum(), src.layers(src.integer(1, 5), false), Pec{});
        const double f = src.uniform(1e9, 20e9);
        for (int deg = 0; deg <= 80; ++deg)
            worst = std::max(worst, std::abs(std::abs(chain_reflection(s, PlaneWave(f, deg * kDeg))) - 1.0));
    }
    return {worst < 1e-12, fmt("200 lossless PEC stacks x 81 angles, max ||G|-1| = %.3e (< 1e-12)", worst)};
}

Verdict oracle_equivalence()
{
    gen::Source src(1002);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Stack s = src.lossy_stack();
        const PlaneWave w = src.wave();
        worst = std::max(worst, rel_err(chain_reflection(s, w), oracle::linear_system_reflection(s, w)));
    }
    return {worst < 1e-9, fmt("1000 lossy stacks, max relative error vs linear system = %.3e (< 1e-9)", worst)};
}

Verdict closed_form_fidelity(std::string& finding)
{
    gen::Source src(1003);
    double worst_random = 0.0;
    int degenerate_random = 0, mismatched = 0;
    for (int i = 0; i < 1000; ++i) {
        const IllusionProblem p(Stack(Medium::vacuum(), src.layers(3, true), src.passive_termination()),
                                Stack(Medium::vacuum(), src.layers(3, true), src.passive_termination()), src.wave(),
                                SynthesisMode::Reflective);
        bool closed_ok = true, oracle_ok = true;
        Complex closed, reference;
        try {
            closed = reflective_synthesis_closed_form(p);
        } catch (const Error&) {
            closed_ok = false;
        }
        try {
            reference = reflective_synthesis_oracle(p);
        } catch (const Error&) {
            oracle_ok = false;
        }
        if (closed_ok != oracle_ok)
            ++mismatched;
        else if (!closed_ok)
            ++degenerate_random;
        else
            worst_random = std::max(worst_random, rel_err(closed, reference));
    }

    double worst_grid = 0.0, printed_vs_oracle = 0.0, printed_reciprocal = 0.0;
    int grid_failures = 0;
    for (const PlaneWave& w : scenario_grid()) {
        const IllusionProblem p = scenario_problem(w, SynthesisMode::Reflective);
        try {
            const Complex reference = reflective_synthesis_oracle(p);
            worst_grid = std::max(worst_grid, rel_err(reflective_synthesis_closed_form(p), reference));
            const Complex printed = reflective_synthesis_printed(p);
            printed_vs_oracle = std::max(printed_vs_oracle, rel_err(printed, reference));
            // actual termination is PEC (rho_4 = -1): printed form equals rho_4 / rho_4m
            printed_reciprocal = std::max(printed_reciprocal, rel_err(printed, -1.0 / reference));
        } catch (const Error&) {
            ++grid_failures;
        }
    }
    finding = fmt("printed-ratio finding: the published closed-form ratio, (A-B)/(C-D), differs from the oracle "
                  "by up to %.3e relative on the scenario grid but equals rho_4/rho_4m within %.3e; the "
                  "corrected (C-D)/(A-B) with the trailing rho_4 factor removed from A and B is used",
                  printed_vs_oracle, printed_reciprocal);
    const bool pass = worst_random < 1e-9 && mismatched == 0 && worst_grid < 1e-9 && grid_failures == 0;
    return {pass, fmt("random: max rel %.3e over %d problems (%d degenerate in both, %d one-sided); "
                      "scenario grid: max rel %.3e, %d failed points (< 1e-9)",
                      worst_random, 1000 - degenerate_random - mismatched, degenerate_random, mismatched, worst_grid,
                      grid_failures)};
}

Verdict substitution()
{
    double worst_reflective = 0.0, worst_transmissive = 0.0;
    int failures = 0;
    for (const PlaneWave& w : scenario_grid()) {
        try {
            const IllusionProblem p = scenario_problem(w, SynthesisMode::Reflective);
            const Complex gamma_i = target_reflection(p);
            const Complex rho4m = synthesize(p).rho_required;
            worst_reflective = std::max(
                worst_reflective, std::abs(chain_reflection(p.actual().with_termination(Sheet{rho4m}), w) - gamma_i));
            const IllusionProblem t = scenario_problem(w, SynthesisMode::Transmissive);
            const Complex rho1m = synthesize(t).rho_required;
            worst_transmissive = std::max(
                worst_transmissive, std::abs(chain_reflection_with_front_sheet(t.actual(), w, rho1m) - gamma_i));
        } catch (const Error&) {
            ++failures;
        }
    }
    return {failures == 0 && worst_reflective < 1e-9 && worst_transmissive < 1e-9,
            fmt("scenario grid: reflective max |dG| = %.3e, transmissive max |dG| = %.3e, %d failed points (< 1e-9)",
                worst_reflective, worst_transmissive, failures)};
}

Verdict self_illusion()
{
    const ScenarioConfig s = builtin_scenario();
    double worst_reflective = 0.0, worst_transmissive = 0.0;
    int failures = 0;
    for (const PlaneWave& w : scenario_grid()) {
        try {
            const StackAnalysis a = analyze_stack(s.actual, w);
            const Complex r4 =
                reflective_synthesis_closed_form(IllusionProblem(s.actual, s.actual, w, SynthesisMode::Reflective));
            worst_reflective = std::max(worst_reflective, std::abs(r4 - a.termination_rho));
            const Complex r1 =
                transmissive_synthesis(IllusionProblem(s.actual, s.actual, w, SynthesisMode::Transmissive)).rho_1m;
            worst_transmissive = std::max(worst_transmissive, std::abs(r1 - a.segments.front().interface.rho));
        } catch (const Error&) {
            ++failures;
        }
    }
    return {failures == 0 && worst_reflective < 1e-12 && worst_transmissive < 1e-12,
            fmt("scenario grid: max |rho_4m - rho_4| = %.3e, max |rho_1m - rho_1| = %.3e, %d failed points (< 1e-12)",
                worst_reflective, worst_transmissive, failures)};
}

Verdict chi_round_trip()
{
    double worst = 0.0;
    int failures = 0;
    for (const PlaneWave& w : scenario_grid()) {
        try {
            const IllusionProblem p = scenario_problem(w, SynthesisMode::Transmissive);
            const TransmissiveDesign d = transmissive_synthesis(p);
            const Complex cos1 = incident_wave_state(p.actual().incident(), w).cos_theta;
            worst = std::max(worst, std::abs(sheet_coefficients({d.chi_e, 0.0}, w.k0(), cos1).rho - d.rho_1m));
        } catch (const Error&) {
            ++failures;
        }
    }
    return {failures == 0 && worst < 1e-9,
            fmt("scenario grid: max |rho(chi_e) - rho_1m| = %.3e, %d failed points (< 1e-9)", worst, failures)};
}

int interior_minima(const std::vector<double>& v)
{
    int count = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] < v[i - 1] && v[i] < v[i + 1])
            ++count;
    return count;
}

Verdict qualitative_reproduction()
{
    const ScenarioConfig s = builtin_scenario();
    std::vector<double> actual, target;
    for (double deg : s.sweep.theta_deg.values()) {
        const PlaneWave w(11e9, deg * kDeg);
        actual.push_back(std::abs(chain_reflection(s.actual, w)));
        target.push_back(std::abs(chain_reflection(s.target, w)));
    }
    const int dips_actual = interior_minima(actual);
    const int dips_target = interior_minima(target);
    const SynthesisOutcome normal = synthesize(scenario_problem(PlaneWave(11e9, 0.0), SynthesisMode::Reflective));
    const double re_eta = normal.eta_required->eta_normalized.real();
    return {dips_actual >= 1 && dips_target >= 1 && re_eta > 0.0,
            fmt("11 GHz: %d interior minima in |G_o|(theta), %d in |G_i|(theta); Re(eta_m/eta0) at 0 deg = %.6f",
                dips_actual, dips_target, re_eta)};
}

Verdict unit_cell_anchor(const fs::path& map_path)
{
    const ReflectionMap map = load_reflection_map(map_path);
    const UnitCellRecord r = select_state(map, 4.5e9, std::polar(0.5, 64 * kDeg));
    const bool pass = r.resistance_ohm == 27.0 && r.capacitance_pf() == 0.35;
    return {pass, fmt("4.5 GHz, 0.5 at 64 deg -> R = %g ohm, C = %g pF", r.resistance_ohm, r.capacitance_pf())};
}

Verdict companion_forms()
{
    const RadialTransform t(0.1, 0.3, 2.0);
    const double continuity = std::abs(t.slope() * 0.1 * 2.0 + t.offset() - radial_forward(t, 0.2));
    const double fixed = std::abs(radial_forward(t, 0.3) - 0.3);
    double round_trip = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double r = 0.3 * (i / 100.0);
        round_trip = std::max(round_trip, std::abs(radial_forward(t, radial_inverse(t, r)) - r));
    }
    const double grating = std::abs(grating_angle(1, 0.5, 1.0) / kDeg - 30.0);
    const StripProfile p(1.3, 4e-3, 1);
    const double extremum = std::abs(pb_phase(p, 0.0) - 2.0 * std::atan(1.3));
    const bool pass = continuity < 1e-12 && fixed < 1e-12 && round_trip < 1e-12 && grating < 1e-9 && extremum < 1e-12;
    return {pass, fmt("radial continuity %.1e, fixed point %.1e, round trip %.1e; grating |dtheta| %.1e deg; "
                      "pb extremum %.1e",
                      continuity, fixed, round_trip, grating, extremum)};
}

Verdict determinism(const std::string& cli, const fs::path& scratch)
{
    fs::create_directories(scratch);
    const fs::path a = scratch / "run1.csv", b = scratch / "run2.csv";
    const auto run = [&](const fs::path& out) {
        const std::string cmd = "\"" + cli + "\" synthesize --scenario builtin --out \"" + out.string() + "\"";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const int c1 = run(a), c2 = run(b);
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const std::string x = slurp(a), y = slurp(b);
    return {c1 == 0 && c2 == 0 && !x.empty() && x == y,
            fmt("exit codes %d/%d, %zu bytes, identical = %s", c1, c2, x.size(), x == y ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 4) {
        std::fprintf(stderr, "usage: %s <illusion-cli> <sample-map.csv> <scratch-dir>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path map_path = argv[2];
    const fs::path scratch = argv[3];

    std::string finding;
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"energy conservation", energy_conservation},
        {"transfer-matrix oracle equivalence", oracle_equivalence},
        {"reflective closed form vs oracle", [&] { return closed_form_fidelity(finding); }},
        {"substitution verification", substitution},
        {"self-illusion identities", self_illusion},
        {"chi_e round trip", chi_round_trip},
        {"qualitative reproduction", qualitative_reproduction},
        {"unit-cell anchor", [&] { return unit_cell_anchor(map_path); }},
        {"companion closed forms", companion_forms},
        {"determinism", [&] { return determinism(cli, scratch); }},
    };

    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("unexpected exception: ") + e.what()};
        }
        failed += v.pass ? 0 : 1;
        std::printf("%s [%2d] %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
        std::fflush(stdout);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!finding.empty())
        std::printf("NOTE %s\n", finding.c_str());
    std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                seconds);
    return failed == 0 ? 0 : 1;
}
