#include "illusion/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "illusion/errors.hpp"

namespace illusion {

using nlohmann::json;

namespace {

constexpr double kMillimeter = 1e-3;

Medium air() { return Medium::vacuum(); }

[[noreturn]] void config_error(const std::string& message)
{
    throw Error(ErrorKind::Config, message);
}

Complex read_complex(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (v.is_number())
        return {v.get<double>(), 0.0};
    if (!v.is_array() || v.size() != 2)
        config_error(std::string("'") + key + "' must be a number or a [re, im] pair");
    return {v[0].get<double>(), v[1].get<double>()};
}

Medium read_medium(const json& j)
{
    const Complex eps = read_complex(j, "eps");
    const Complex mu = j.contains("mu") ? read_complex(j, "mu") : Complex{1.0, 0.0};
    return Medium(eps, mu);
}

Termination read_termination(const json& j)
{
    const std::string type = j.at("type").get<std::string>();
    if (type == "pec")
        return Pec{};
    if (type == "open")
        return OpenHalfSpace{j.contains("eps") ? read_medium(j) : air()};
    if (type == "sheet")
        return Sheet{read_complex(j, "rho")};
    config_error("termination type must be 'pec', 'open' or 'sheet', got '" + type + "'");
}

Stack read_stack(const json& j)
{
    const Medium incident = j.contains("incident") ? read_medium(j.at("incident")) : air();
    std::vector<Layer> layers;
    for (const json& layer : j.at("layers"))
        layers.emplace_back(read_medium(layer), layer.at("thickness_mm").get<double>() * kMillimeter);
    return Stack(incident, std::move(layers), read_termination(j.at("termination")));
}

SweepRange read_range(const json& j)
{
    if (j.is_number()) {
        const double v = j.get<double>();
        return {v, v, 1.0};
    }
    return {j.at("start").get<double>(), j.at("stop").get<double>(), j.at("step").get<double>()};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json medium_json(const Medium& m)
{
    json j{{"eps", complex_json(m.eps_r())}};
    if (m.mu_r() != Complex{1.0, 0.0})
        j["mu"] = complex_json(m.mu_r());
    return j;
}

json termination_json(const Termination& t)
{
    if (std::holds_alternative<Pec>(t))
        return {{"type", "pec"}};
    if (const auto* open = std::get_if<OpenHalfSpace>(&t)) {
        json j = medium_json(open->medium);
        j["type"] = "open";
        return j;
    }
    return {{"type", "sheet"}, {"rho", complex_json(std::get<Sheet>(t).rho)}};
}

json stack_json(const Stack& s)
{
    json layers = json::array();
    for (const Layer& layer : s.layers()) {
        json l = medium_json(layer.medium());
        l["thickness_mm"] = layer.thickness() / kMillimeter;
        layers.push_back(l);
    }
    return {{"incident", medium_json(s.incident())},
            {"layers", layers},
            {"termination", termination_json(s.termination())}};
}

json range_json(const SweepRange& r)
{
    return {{"start", r.start}, {"stop", r.stop}, {"step", r.step}};
}

}  // namespace

std::vector<double> SweepRange::values() const
{
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

void validate_sweep(const SweepSpec& sweep)
{
    const auto check = [](const SweepRange& r, const char* name) {
        if (!std::isfinite(r.start) || !std::isfinite(r.stop) || !std::isfinite(r.step))
            config_error(std::string(name) + ": start, stop and step must be finite numbers");
        if (r.step <= 0.0)
            config_error(std::string(name) + ": step must be > 0, got " + std::to_string(r.step));
        if (r.start > r.stop)
            config_error(std::string(name) + ": start (" + std::to_string(r.start) +
                         ") must not exceed stop (" + std::to_string(r.stop) + ")");
        if ((r.stop - r.start) / r.step > 1e7)
            config_error(std::string(name) + ": more than 1e7 grid points requested");
    };
    check(sweep.theta_deg, "sweep.theta_deg");
    check(sweep.freq_ghz, "sweep.freq_ghz");
    if (sweep.theta_deg.start < 0.0)
        config_error("sweep.theta_deg: start must be >= 0");
    if (sweep.theta_deg.stop > kMaxSweepAngleDeg)
        config_error("sweep.theta_deg: stop must be <= 80 degrees, got " +
                     std::to_string(sweep.theta_deg.stop));
    if (sweep.freq_ghz.start <= 0.0)
        config_error("sweep.freq_ghz: start must be > 0 GHz");
}

ScenarioConfig builtin_scenario()
{
    const Medium fr4(Complex{3.9, -0.08});
    const Medium teflon(Complex{2.1, -0.0006});
    Stack actual(air(),
                 {Layer(air(), 120 * kMillimeter), Layer(fr4, 60 * kMillimeter),
                  Layer(air(), 120 * kMillimeter)},
                 Pec{});
    Stack target(air(),
                 {Layer(air(), 60 * kMillimeter), Layer(teflon, 120 * kMillimeter),
                  Layer(air(), 120 * kMillimeter)},
                 OpenHalfSpace{air()});
    return {std::move(actual), std::move(target), SynthesisMode::Reflective,
            SweepSpec{{0.0, 80.0, 0.5}, {10.0, 12.0, 0.1}}, OutputSpec{}};
}

ScenarioConfig parse_scenario(std::string_view json_text)
{
    try {
        const json j = json::parse(json_text);
        const ScenarioConfig defaults = builtin_scenario();

        SynthesisMode mode = SynthesisMode::Reflective;
        if (j.contains("mode")) {
            const std::string m = j.at("mode").get<std::string>();
            if (m == "transmissive")
                mode = SynthesisMode::Transmissive;
            else if (m != "reflective")
                config_error("mode must be 'reflective' or 'transmissive', got '" + m + "'");
        }

        SweepSpec sweep = defaults.sweep;
        if (j.contains("sweep")) {
            const json& s = j.at("sweep");
            if (s.contains("theta_deg"))
                sweep.theta_deg = read_range(s.at("theta_deg"));
            if (s.contains("freq_ghz"))
                sweep.freq_ghz = read_range(s.at("freq_ghz"));
        }
        validate_sweep(sweep);

        OutputSpec output;
        if (j.contains("output")) {
            const json& o = j.at("output");
            output.path = o.value("path", "");
            const std::string format = o.value("format", "csv");
            if (format == "svg")
                output.format = OutputFormat::Svg;
            else if (format != "csv")
                config_error("output.format must be 'csv' or 'svg', got '" + format + "'");
        }

        return {read_stack(j.at("actual")), read_stack(j.at("target")), mode, sweep, output};
    } catch (const json::exception& e) {
        config_error(std::string("scenario JSON: ") + e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Config)
            throw;
        config_error(std::string("scenario: ") + e.what());
    }
}

ScenarioConfig load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        config_error("cannot open scenario file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

std::string scenario_to_json(const ScenarioConfig& config)
{
    json j{{"actual", stack_json(config.actual)},
           {"target", stack_json(config.target)},
           {"mode", config.mode == SynthesisMode::Reflective ? "reflective" : "transmissive"},
           {"sweep", {{"theta_deg", range_json(config.sweep.theta_deg)},
                      {"freq_ghz", range_json(config.sweep.freq_ghz)}}},
           {"output", {{"path", config.output.path},
                       {"format", config.output.format == OutputFormat::Svg ? "svg" : "csv"}}}};
    return j.dump(2) + "\n";
}

}  // namespace illusion
