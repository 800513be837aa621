#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "pgdus/estimation.hpp"
#include "pgdus/gof.hpp"
#include "pgdus/reliability.hpp"

namespace pgdus::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "pgdus/1";

// Real rounded to 12 significant digits; non-finite values become null.
json real(double v);

json params_json(const PgdusModel& m);
json fit_json(const FitResult& fit);
json gof_json(const GofReport& r);
json reliability_fit_json(const ReliabilityFit& fit);

// Two-space indented document plus trailing newline, to `path` or stdout
// when path is "-".
void write_json(const std::filesystem::path& path, const json& doc);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace pgdus::cli
