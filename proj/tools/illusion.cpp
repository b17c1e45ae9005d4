// Command-line front end: sweeps, synthesis, unit-cell selection and the
// closed-form companion models.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "illusion/companions.hpp"
#include "illusion/emit.hpp"
#include "illusion/errors.hpp"
#include "illusion/scenario.hpp"
#include "illusion/sweep.hpp"
#include "illusion/unitcell.hpp"

#ifndef ILLUSION_SAMPLE_MAP
#define ILLUSION_SAMPLE_MAP "data/sample_reflection_map.csv"
#endif

namespace {

using namespace illusion;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitDegenerate = 2;

constexpr double kDegree = std::numbers::pi / 180.0;

struct CommonOptions {
    std::string config;
    std::string out;
};

struct SweepOptions {
    CommonOptions common;
    std::string scenario;
    std::string format;
    std::string mode;
    bool serial = false;
};

void add_common(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--config", o.config, "JSON configuration file");
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty())
        std::cout << content;
    else
        write_text_file(path, content);
}

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Config, "cannot open config " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Config, path + ": " + e.what());
    }
}

// Fills `value` from the config document when the flag was not given.
template <typename T>
void from_config(const json& doc, const char* key, const CLI::Option* flag, T& value)
{
    if (flag->count() > 0 || !doc.contains(key))
        return;
    try {
        value = doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Config, std::string("config key '") + key + "': " + e.what());
    }
}

int run_sweep(const SweepOptions& o, SweepKind kind)
{
    if (o.common.config.empty() == o.scenario.empty())
        throw Error(ErrorKind::Config, "give exactly one of --config <path> or --scenario builtin");
    if (!o.scenario.empty() && o.scenario != "builtin")
        throw Error(ErrorKind::Config, "unknown scenario '" + o.scenario + "' (only 'builtin')");

    ScenarioConfig config = o.scenario.empty() ? load_scenario(o.common.config) : builtin_scenario();
    if (!o.mode.empty())
        config.mode = o.mode == "transmissive" ? SynthesisMode::Transmissive : SynthesisMode::Reflective;
    if (!o.common.out.empty())
        config.output.path = o.common.out;
    if (!o.format.empty())
        config.output.format = o.format == "svg" ? OutputFormat::Svg : OutputFormat::Csv;
    else if (config.output.path.ends_with(".svg"))
        config.output.format = OutputFormat::Svg;

    if (kind == SweepKind::Synthesize && config.actual.layers().size() != kChainLayers)
        throw Error(ErrorKind::Config, "synthesis needs an actual stack of exactly 3 layers");

    SweepTable table;
    if (kind == SweepKind::Simulate)
        table = o.serial ? run_simulate_serial(config) : run_simulate_parallel(config);
    else
        table = o.serial ? run_synthesize_serial(config) : run_synthesize_parallel(config);

    write_output(config.output.path, render(table, config.output.format));
    if (table.all_failed()) {
        std::cerr << "every grid point failed (first error: " << table.rows.front().error << ")\n";
        return kExitDegenerate;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Plane-wave illusion synthesis for 1D layered environments"};
    app.require_subcommand(1);

    SweepOptions simulate_opts, synthesize_opts;
    for (auto [name, opts, help] :
         {std::tuple{"simulate", &simulate_opts, "total reflection of both environments over the sweep"},
          std::tuple{"synthesize", &synthesize_opts, "metasurface state required at each sweep point"}}) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_common(cmd, opts->common);
        cmd->add_option("--scenario", opts->scenario, "use a built-in scenario ('builtin')");
        cmd->add_option("--format", opts->format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
        cmd->add_option("--mode", opts->mode, "override the scenario mode")
            ->check(CLI::IsMember({"reflective", "transmissive"}));
        cmd->add_flag("--serial", opts->serial, "use the serial reference kernel");
    }

    // select-cell
    CommonOptions cell_common;
    std::string cell_map = ILLUSION_SAMPLE_MAP;
    double cell_freq = 4.5, cell_amp = 0.5, cell_phase = 64.0;
    bool cell_phase_only = false;
    CLI::App* select = app.add_subcommand("select-cell", "nearest unit-cell state to a target reflection");
    add_common(select, cell_common);
    auto* cell_map_opt = select->add_option("--map", cell_map, "reflection map CSV");
    auto* cell_freq_opt = select->add_option("--freq-ghz", cell_freq, "frequency in GHz");
    auto* cell_amp_opt = select->add_option("--amplitude", cell_amp, "target reflection amplitude");
    auto* cell_phase_opt = select->add_option("--phase-deg", cell_phase, "target reflection phase");
    auto* cell_po_opt = select->add_flag("--phase-only", cell_phase_only, "match phase only");

    // coding-set
    CommonOptions coding_common;
    std::string coding_map = ILLUSION_SAMPLE_MAP;
    double coding_freq = 4.5, coding_min_amp = kDefaultMinAmplitude;
    int coding_bits = 1;
    CLI::App* coding = app.add_subcommand("coding-set", "N-bit coding set with uniform phase steps");
    add_common(coding, coding_common);
    auto* coding_map_opt = coding->add_option("--map", coding_map, "reflection map CSV");
    auto* coding_freq_opt = coding->add_option("--freq-ghz", coding_freq, "frequency in GHz");
    auto* coding_bits_opt = coding->add_option("--bits", coding_bits, "bits per cell");
    auto* coding_amp_opt = coding->add_option("--min-amplitude", coding_min_amp, "admissible amplitude floor");

    // companion
    CLI::App* companion = app.add_subcommand("companion", "closed-form companion models");
    companion->require_subcommand(1);

    CommonOptions map_common;
    double map_r1 = 0.1, map_r2 = 0.3, map_q = 2.0;
    int map_samples = 101;
    CLI::App* to_map = companion->add_subcommand("to-map", "radial compression map and its inverse");
    add_common(to_map, map_common);
    auto* map_r1_opt = to_map->add_option("--r1", map_r1, "inner radius (m)");
    auto* map_r2_opt = to_map->add_option("--r2", map_r2, "outer radius (m)");
    auto* map_q_opt = to_map->add_option("--q", map_q, "compression factor");
    auto* map_n_opt = to_map->add_option("--samples", map_samples, "sample count")->check(CLI::Range(2, 1000000));

    CommonOptions pb_common;
    double pb_amp = 1.0, pb_period_mm = 10.0;
    int pb_sigma = 1, pb_samples = 101;
    CLI::App* pb = companion->add_subcommand("pb-phase", "sinusoidal strip height and geometric phase");
    add_common(pb, pb_common);
    auto* pb_amp_opt = pb->add_option("--amplitude", pb_amp, "amplitude coefficient A");
    auto* pb_period_opt = pb->add_option("--period-mm", pb_period_mm, "period (mm)");
    auto* pb_sigma_opt = pb->add_option("--sigma", pb_sigma, "handedness +1 or -1");
    auto* pb_n_opt = pb->add_option("--samples", pb_samples, "samples over one period")->check(CLI::Range(2, 1000000));

    CommonOptions grating_common;
    double grating_lambda_mm = 5.0, grating_period_mm = 10.0;
    int grating_orders = 3;
    CLI::App* grating = companion->add_subcommand("grating", "deflection angles of diffraction orders");
    add_common(grating, grating_common);
    auto* gr_lambda_opt = grating->add_option("--wavelength-mm", grating_lambda_mm, "wavelength (mm)");
    auto* gr_period_opt = grating->add_option("--period-mm", grating_period_mm, "period (mm)");
    auto* gr_orders_opt = grating->add_option("--max-order", grating_orders, "largest |m| listed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand("simulate"))
            return run_sweep(simulate_opts, SweepKind::Simulate);
        if (app.got_subcommand("synthesize"))
            return run_sweep(synthesize_opts, SweepKind::Synthesize);

        if (select->parsed()) {
            if (!cell_common.config.empty()) {
                const json doc = load_json(cell_common.config);
                from_config(doc, "map", cell_map_opt, cell_map);
                from_config(doc, "freq_ghz", cell_freq_opt, cell_freq);
                from_config(doc, "amplitude", cell_amp_opt, cell_amp);
                from_config(doc, "phase_deg", cell_phase_opt, cell_phase);
                from_config(doc, "phase_only", cell_po_opt, cell_phase_only);
            }
            const ReflectionMap map = load_reflection_map(cell_map);
            const Complex target = std::polar(cell_amp, cell_phase * kDegree);
            const UnitCellRecord r =
                select_state(map, cell_freq * 1e9, target,
                             cell_phase_only ? DistanceMetric::PhaseOnly : DistanceMetric::Complex);
            std::string csv = "f_ghz,r_ohm,c_pf,rho_re,rho_im,amplitude,phase_deg\n";
            csv += format_double(r.frequency_ghz()) + "," + format_double(r.resistance_ohm) + "," +
                   format_double(r.capacitance_pf()) + "," + format_double(r.rho.real()) + "," +
                   format_double(r.rho.imag()) + "," + format_double(std::abs(r.rho)) + "," +
                   format_double(std::arg(r.rho) / kDegree) + "\n";
            write_output(cell_common.out, csv);
            return kExitOk;
        }

        if (coding->parsed()) {
            if (!coding_common.config.empty()) {
                const json doc = load_json(coding_common.config);
                from_config(doc, "map", coding_map_opt, coding_map);
                from_config(doc, "freq_ghz", coding_freq_opt, coding_freq);
                from_config(doc, "bits", coding_bits_opt, coding_bits);
                from_config(doc, "min_amplitude", coding_amp_opt, coding_min_amp);
            }
            const ReflectionMap map = load_reflection_map(coding_map);
            const CodingSet set = build_coding_set(map, coding_freq * 1e9, coding_bits, coding_min_amp);
            std::string csv = "slot,target_phase_deg,r_ohm,c_pf,rho_re,rho_im,amplitude,phase_error_deg\n";
            for (std::size_t k = 0; k < set.states.size(); ++k) {
                const UnitCellRecord& r = set.states[k];
                csv += std::to_string(k) + "," + format_double(set.target_phases[k] / kDegree) + "," +
                       format_double(r.resistance_ohm) + "," + format_double(r.capacitance_pf()) + "," +
                       format_double(r.rho.real()) + "," + format_double(r.rho.imag()) + "," +
                       format_double(std::abs(r.rho)) + "," +
                       format_double(wrapped_phase_distance(std::arg(r.rho), set.target_phases[k]) / kDegree) +
                       "\n";
            }
            write_output(coding_common.out, csv);
            return kExitOk;
        }

        if (to_map->parsed()) {
            if (!map_common.config.empty()) {
                const json doc = load_json(map_common.config);
                from_config(doc, "r1", map_r1_opt, map_r1);
                from_config(doc, "r2", map_r2_opt, map_r2);
                from_config(doc, "q", map_q_opt, map_q);
                from_config(doc, "samples", map_n_opt, map_samples);
            }
            const RadialTransform t(map_r1, map_r2, map_q);
            std::string csv = "r,r_prime,r_back\n";
            for (int i = 0; i < map_samples; ++i) {
                const double r = map_r2 * i / (map_samples - 1);
                const double rp = radial_forward(t, r);
                csv += format_double(r) + "," + format_double(rp) + "," + format_double(radial_inverse(t, rp)) +
                       "\n";
            }
            write_output(map_common.out, csv);
            return kExitOk;
        }

        if (pb->parsed()) {
            if (!pb_common.config.empty()) {
                const json doc = load_json(pb_common.config);
                from_config(doc, "amplitude", pb_amp_opt, pb_amp);
                from_config(doc, "period_mm", pb_period_opt, pb_period_mm);
                from_config(doc, "sigma", pb_sigma_opt, pb_sigma);
                from_config(doc, "samples", pb_n_opt, pb_samples);
            }
            const StripProfile p(pb_amp, pb_period_mm * 1e-3, pb_sigma);
            std::string csv = "x_mm,y_mm,pb_phase_deg\n";
            for (int i = 0; i < pb_samples; ++i) {
                const double x = p.period() * i / (pb_samples - 1);
                csv += format_double(x * 1e3) + "," + format_double(strip_height(p, x) * 1e3) + "," +
                       format_double(pb_phase(p, x) / kDegree) + "\n";
            }
            write_output(pb_common.out, csv);
            return kExitOk;
        }

        if (grating->parsed()) {
            if (!grating_common.config.empty()) {
                const json doc = load_json(grating_common.config);
                from_config(doc, "wavelength_mm", gr_lambda_opt, grating_lambda_mm);
                from_config(doc, "period_mm", gr_period_opt, grating_period_mm);
                from_config(doc, "max_order", gr_orders_opt, grating_orders);
            }
            std::string csv = "order,theta_deg\n";
            for (int m = -grating_orders; m <= grating_orders; ++m) {
                try {
                    const double theta = grating_angle(m, grating_lambda_mm * 1e-3, grating_period_mm * 1e-3);
                    csv += std::to_string(m) + "," + format_double(theta / kDegree) + "\n";
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::EvanescentOrder)
                        throw;
                }
            }
            write_output(grating_common.out, csv);
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
