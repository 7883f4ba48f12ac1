#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "jcm/observables.hpp"

namespace jcm::cli {

// CSV output: 17 significant digits, '.' decimal point, LF line endings,
// independent of the global locale.

std::string format_double(double x);

void write_pnd_csv(std::ostream& out, const Pnd& pnd);
/// header "re,im,q", one row per grid point, row-major (im outer, re inner).
void write_grid_csv(std::ostream& out, const PhaseGrid& grid);
void write_series_csv(std::ostream& out, std::string_view x_name, std::string_view y_name,
                      std::span<const double> x, std::span<const double> y);

/// File-name-safe form of a tau expression ("pi/8-pi/24000" -> "pi_8-pi_24000").
std::string slug(std::string_view expression);

/// Opens in binary mode so LF endings survive on every platform.
void write_text_file(const std::filesystem::path& path, const std::string& contents);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace jcm::cli
