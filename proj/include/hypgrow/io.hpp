#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypgrow/profile.hpp"

namespace hypgrow {

// Profile tables serialize to CSV with the fixed header t,g,f,env_lo,env_hi.
// Absent values stay empty, numbers carry 17 significant digits so a read
// back reproduces every double bit for bit.
void emit_profile_csv(const ProfileTable& t, const std::string& path);

struct CsvRow {
    double t = 0.0;
    double g = 0.0;
    std::optional<double> f;
    std::optional<double> env_lo;
    std::optional<double> env_hi;
};

// Strict reader for the same format. ParseError on any deviation, IoError
// when the file cannot be opened.
std::vector<CsvRow> read_profile_csv(const std::string& path);

// Static SVG line plot of the profile in in_csv: f against t (g when the f
// column is empty), plus both envelope curves when the file carries them.
// Identical input produces identical bytes.
void emit_svg_plot(const std::string& in_csv, const std::string& out_svg);

// Write-to-temp-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace hypgrow
