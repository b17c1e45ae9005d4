#include "illusion/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

#include "illusion/errors.hpp"

namespace illusion {

namespace {

void append_complex(std::string& line, Complex z)
{
    line += ',';
    line += format_double(z.real());
    line += ',';
    line += format_double(z.imag());
}

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;  // NaN y breaks the line
};

struct Panel {
    std::string title;
    std::vector<Series> series;
};

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

double phase_deg(Complex z) { return std::arg(z) * 180.0 / std::numbers::pi; }

void draw_panel(std::ostringstream& out, const Panel& panel, double top, const std::string& x_label)
{
    constexpr double left = 70.0, width = 780.0, height = 230.0;

    double x_min = INFINITY, x_max = -INFINITY, y_min = INFINITY, y_max = -INFINITY;
    for (const Series& s : panel.series)
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(y))
                continue;
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    if (!std::isfinite(x_min)) {
        x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    }
    if (x_max == x_min)
        x_max = x_min + 1.0;
    if (y_max == y_min) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * width; };
    const auto sy = [&](double y) { return top + height - (y - y_min) / (y_max - y_min) * height; };

    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"none\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << left << "\" y=\"" << top - 8 << "\" font-size=\"14\">" << panel.title << "</text>\n";
    out << "<text x=\"" << left + width / 2 << "\" y=\"" << top + height + 34
        << "\" font-size=\"12\" text-anchor=\"middle\">" << x_label << "</text>\n";
    for (int i = 0; i <= 4; ++i) {
        const double y = y_min + (y_max - y_min) * i / 4.0;
        const double x = x_min + (x_max - x_min) * i / 4.0;
        out << "<text x=\"" << left - 6 << "\" y=\"" << sy(y) + 4
            << "\" font-size=\"10\" text-anchor=\"end\">" << format_double(std::round(y * 1000) / 1000)
            << "</text>\n";
        out << "<text x=\"" << sx(x) << "\" y=\"" << top + height + 16
            << "\" font-size=\"10\" text-anchor=\"middle\">" << format_double(std::round(x * 1000) / 1000)
            << "</text>\n";
    }

    std::size_t colour = 0;
    for (const Series& s : panel.series) {
        const char* stroke = kPalette[colour++ % std::size(kPalette)];
        std::string path;
        bool pen_down = false;
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(y)) {
                pen_down = false;
                continue;
            }
            char buf[64];
            std::snprintf(buf, sizeof buf, "%c%.2f %.2f ", pen_down ? 'L' : 'M', sx(x), sy(y));
            path += buf;
            pen_down = true;
        }
        if (!path.empty())
            out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << stroke
                << "\" stroke-width=\"1.2\"><title>" << s.label << "</title></path>\n";
    }
}

}  // namespace

std::string format_double(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string csv_header(const SweepTable& table)
{
    std::string header = "freq_ghz,theta_deg,g_act_re,g_act_im,g_tgt_re,g_tgt_im";
    if (table.kind == SweepKind::Synthesize) {
        header += ",rho_req_re,rho_req_im";
        header += table.mode == SynthesisMode::Reflective ? ",eta_n_re,eta_n_im" : ",chi_e_re,chi_e_im";
        header += ",passive";
    }
    return header + ",err";
}

std::string to_csv(const SweepTable& table)
{
    std::string out = csv_header(table) + "\n";
    for (const SweepRow& row : table.rows) {
        std::string line = format_double(row.freq_ghz) + "," + format_double(row.theta_deg);
        append_complex(line, row.gamma_actual);
        append_complex(line, row.gamma_target);
        if (table.kind == SweepKind::Synthesize) {
            append_complex(line, row.rho_required);
            append_complex(line, row.secondary);
            line += row.error.empty() ? (row.passive ? ",1" : ",0") : ",";
        }
        line += ',';
        line += row.error;
        out += line;
        out += '\n';
    }
    return out;
}

std::string to_svg(const SweepTable& table)
{
    std::set<double> thetas;
    for (const SweepRow& row : table.rows)
        thetas.insert(row.theta_deg);
    const bool versus_theta = thetas.size() > 1;
    const std::string x_label = versus_theta ? "incidence angle (deg)" : "frequency (GHz)";

    // one curve per fixed value of the other variable
    std::map<double, std::vector<const SweepRow*>> groups;
    for (const SweepRow& row : table.rows)
        groups[versus_theta ? row.freq_ghz : row.theta_deg].push_back(&row);

    struct Quantity {
        std::string name;
        Complex SweepRow::*field;
    };
    std::vector<Quantity> quantities;
    if (table.kind == SweepKind::Simulate)
        quantities = {{"actual", &SweepRow::gamma_actual}, {"target", &SweepRow::gamma_target}};
    else
        quantities = {{"required rho", &SweepRow::rho_required}};

    Panel amplitude{"reflection amplitude", {}};
    Panel phase{"reflection phase (deg)", {}};
    for (const auto& [key, rows] : groups)
        for (const Quantity& q : quantities) {
            const std::string label = q.name + (versus_theta ? " @ " + format_double(key) + " GHz"
                                                            : " @ " + format_double(key) + " deg");
            Series amp{label, {}}, ph{label, {}};
            for (const SweepRow* row : rows) {
                const double x = versus_theta ? row->theta_deg : row->freq_ghz;
                const Complex z = row->*q.field;
                amp.points.emplace_back(x, std::abs(z));
                ph.points.emplace_back(x, phase_deg(z));
            }
            amplitude.series.push_back(std::move(amp));
            phase.series.push_back(std::move(ph));
        }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"620\" "
           "font-family=\"sans-serif\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    draw_panel(out, amplitude, 30.0, x_label);
    draw_panel(out, phase, 340.0, x_label);
    out << "</svg>\n";
    return out.str();
}

std::string render(const SweepTable& table, OutputFormat format)
{
    return format == OutputFormat::Svg ? to_svg(table) : to_csv(table);
}

void write_text_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::Write, "cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out)
        throw Error(ErrorKind::Write, "failed writing " + path.string());
}

void emit(const SweepTable& table, OutputFormat format, const std::filesystem::path& path)
{
    write_text_file(path, render(table, format));
}

}  // namespace illusion
