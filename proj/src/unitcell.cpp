#include "illusion/unitcell.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <string>
#include <tuple>

#include "illusion/errors.hpp"

namespace illusion {

namespace {

bool same_frequency(double a, double b)
{
    return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
}

// (R, C) order used to break ties deterministically.
bool smaller_state(const UnitCellRecord& a, const UnitCellRecord& b)
{
    return std::tie(a.resistance_ohm, a.capacitance_f) < std::tie(b.resistance_ohm, b.capacitance_f);
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_field(std::string_view text, std::size_t line, const char* column)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value))
        throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": bad " + column + " value '" +
                                          std::string(text) + "'");
    return value;
}

UnitCellRecord parse_row(std::string_view row, std::size_t line)
{
    static constexpr const char* columns[] = {"f_ghz", "r_ohm", "c_pf", "rho_re", "rho_im"};
    double values[5];
    std::size_t field = 0;
    while (true) {
        const auto comma = row.find(',');
        if (field == 5)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected 5 fields");
        values[field] = parse_field(row.substr(0, comma), line, columns[field]);
        ++field;
        if (comma == std::string_view::npos)
            break;
        row.remove_prefix(comma + 1);
    }
    if (field != 5)
        throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected 5 fields");
    if (values[0] <= 0.0 || values[1] <= 0.0 || values[2] <= 0.0)
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(line) + ": frequency, R and C must be positive");
    return {values[0] * 1e9, values[1], values[2] * 1e-12, Complex{values[3], values[4]}};
}

}  // namespace

ReflectionMap::ReflectionMap(std::vector<UnitCellRecord> records) : records_(std::move(records))
{
    if (records_.empty())
        throw Error(ErrorKind::EmptyMap, "reflection map has no records");

    std::set<std::tuple<double, double, double>> seen;
    for (const UnitCellRecord& r : records_) {
        if (!is_finite(r.rho) || !(r.frequency_hz > 0.0) || !(r.resistance_ohm > 0.0) ||
            !(r.capacitance_f > 0.0))
            throw Error(ErrorKind::InvalidInput, "unit-cell record out of range");

        const auto known = std::find_if(frequencies_.begin(), frequencies_.end(),
                                        [&](double f) { return same_frequency(f, r.frequency_hz); });
        const double key_frequency = known != frequencies_.end() ? *known : r.frequency_hz;
        if (known == frequencies_.end())
            frequencies_.push_back(key_frequency);

        if (!seen.emplace(key_frequency, r.resistance_ohm, r.capacitance_f).second)
            throw Error(ErrorKind::DuplicateState,
                        "duplicate state (" + std::to_string(r.frequency_ghz()) + " GHz, " +
                            std::to_string(r.resistance_ohm) + " ohm, " +
                            std::to_string(r.capacitance_pf()) + " pF)");
    }
    std::sort(frequencies_.begin(), frequencies_.end());
}

std::vector<UnitCellRecord> ReflectionMap::at_frequency(double frequency_hz) const
{
    std::vector<UnitCellRecord> out;
    for (const UnitCellRecord& r : records_)
        if (same_frequency(r.frequency_hz, frequency_hz))
            out.push_back(r);
    return out;
}

ReflectionMap parse_reflection_map(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != kReflectionMapHeader)
        throw Error(ErrorKind::Parse, "line 1: header must be exactly '" +
                                          std::string(kReflectionMapHeader) + "'");

    std::vector<UnitCellRecord> records;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (trim(line).empty())
            continue;
        records.push_back(parse_row(line, number));
    }
    return ReflectionMap(std::move(records));
}

ReflectionMap load_reflection_map(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open reflection map " + path.string());
    return parse_reflection_map(in);
}

double wrapped_phase_distance(double a, double b)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double shifted = std::fmod(a - b + std::numbers::pi, two_pi);
    if (shifted < 0.0)
        shifted += two_pi;
    return std::abs(shifted - std::numbers::pi);
}

UnitCellRecord select_state(const ReflectionMap& map, double frequency_hz, Complex rho_target,
                            DistanceMetric metric)
{
    const std::vector<UnitCellRecord> candidates = map.at_frequency(frequency_hz);
    if (candidates.empty())
        throw Error(ErrorKind::MissingFrequency,
                    "no records at " + std::to_string(frequency_hz * 1e-9) + " GHz");

    const auto distance = [&](const UnitCellRecord& r) {
        return metric == DistanceMetric::Complex
                   ? std::abs(r.rho - rho_target)
                   : wrapped_phase_distance(std::arg(r.rho), std::arg(rho_target));
    };

    const UnitCellRecord* best = &candidates.front();
    double best_distance = distance(*best);
    for (const UnitCellRecord& r : candidates) {
        const double d = distance(r);
        if (d < best_distance || (d == best_distance && smaller_state(r, *best))) {
            best = &r;
            best_distance = d;
        }
    }
    return *best;
}

CodingSet build_coding_set(const ReflectionMap& map, double frequency_hz, int n_bit,
                           double min_amplitude)
{
    if (n_bit < 1 || n_bit > 16)
        throw Error(ErrorKind::InvalidInput, "n_bit must lie in [1, 16]");
    const std::size_t slots = std::size_t{1} << n_bit;

    std::vector<UnitCellRecord> admissible = map.at_frequency(frequency_hz);
    if (admissible.empty())
        throw Error(ErrorKind::MissingFrequency,
                    "no records at " + std::to_string(frequency_hz * 1e-9) + " GHz");
    std::erase_if(admissible, [&](const UnitCellRecord& r) { return std::abs(r.rho) < min_amplitude; });
    if (admissible.size() < slots)
        throw Error(ErrorKind::InfeasibleCodingSet,
                    std::to_string(admissible.size()) + " admissible states for " +
                        std::to_string(slots) + " slots");
    std::sort(admissible.begin(), admissible.end(), smaller_state);

    const auto strongest = std::max_element(
        admissible.begin(), admissible.end(),
        [](const UnitCellRecord& a, const UnitCellRecord& b) { return std::abs(a.rho) < std::abs(b.rho); });

    CodingSet set;
    set.n_bit = n_bit;
    set.phase_step = 2.0 * std::numbers::pi / static_cast<double>(slots);
    const double phi0 = std::arg(strongest->rho);

    std::vector<bool> used(admissible.size(), false);
    for (std::size_t k = 0; k < slots; ++k) {
        const double target = phi0 + static_cast<double>(k) * set.phase_step;
        std::size_t best = admissible.size();
        double best_distance = std::numeric_limits<double>::infinity();
        // admissible is (R, C)-sorted, so strict < keeps the smaller state on ties
        for (std::size_t i = 0; i < admissible.size(); ++i) {
            if (used[i])
                continue;
            const double d = wrapped_phase_distance(std::arg(admissible[i].rho), target);
            if (d < best_distance) {
                best = i;
                best_distance = d;
            }
        }
        used[best] = true;
        set.target_phases.push_back(target);
        set.states.push_back(admissible[best]);
    }
    return set;
}

}  // namespace illusion
