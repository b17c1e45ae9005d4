#pragma once

#include <filesystem>
#include <string>

#include "illusion/scenario.hpp"
#include "illusion/sweep.hpp"

namespace illusion {

/// %.17g: round-trips every double and is byte-stable across runs.
std::string format_double(double value);

std::string csv_header(const SweepTable& table);
std::string to_csv(const SweepTable& table);

/// Amplitude and phase (degrees) line plots against the swept variable.
std::string to_svg(const SweepTable& table);

std::string render(const SweepTable& table, OutputFormat format);

/// Writes the rendered table; throws Error(Write) naming the path on failure.
void emit(const SweepTable& table, OutputFormat format, const std::filesystem::path& path);

/// Writes `content` verbatim to `path`; throws Error(Write) on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace illusion
